#pragma once

// Machine-readable serialization of SeriesRecord tables.
//
// CSV: `# key: value` metadata lines, then a header row, then one row per
// abscissa value. Numbers use scientific notation with 17 significant
// digits. With several records a leading `record` column holds the record
// index.
//
// JSON: a single object {"meta": {...}, "rows": [{column: value, ...}, ...]};
// with several records each row also carries "record": <label>.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwalk/analysis.hpp"

namespace qwalk {

inline constexpr const char* kVersion = "0.1.0";

using Meta = nlohmann::ordered_json;

enum class OutputFormat { csv, json };

/// "%.16e"
std::string format_number(double x);

void write_csv(std::ostream& os, const std::vector<SeriesRecord>& records, const Meta& meta);
void write_json(std::ostream& os, const std::vector<SeriesRecord>& records, const Meta& meta);
void write_records(std::ostream& os, OutputFormat format, const std::vector<SeriesRecord>& records,
                   const Meta& meta);

}  // namespace qwalk
