#include "qwalk/output.hpp"

#include <cstdio>
#include <ostream>

namespace qwalk {

namespace {

// Record metadata merged under the run metadata; keys are prefixed with the
// record label when there is more than one record.
Meta merged_meta(const std::vector<SeriesRecord>& records, const Meta& meta) {
  Meta out = meta;
  for (const auto& rec : records) {
    for (const auto& [key, value] : rec.meta) {
      out[records.size() > 1 ? rec.label + "." + key : key] = value;
    }
  }
  return out;
}

std::string meta_value(const Meta& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_number(v.get<double>());
  return v.dump();
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<SeriesRecord>& records, const Meta& meta) {
  const Meta all = merged_meta(records, meta);
  for (const auto& [key, value] : all.items()) os << "# " << key << ": " << meta_value(value) << '\n';
  if (records.empty()) return;

  const bool multi = records.size() > 1;
  const SeriesRecord& first = records.front();
  if (multi) os << "record,";
  os << first.abscissa_name;
  for (const auto& c : first.columns) os << ',' << c;
  os << '\n';

  for (std::size_t r = 0; r < records.size(); ++r) {
    const SeriesRecord& rec = records[r];
    for (std::size_t i = 0; i < rec.size(); ++i) {
      if (multi) os << r << ',';
      os << format_number(rec.abscissa[i]);
      for (double v : rec.rows[i]) os << ',' << format_number(v);
      os << '\n';
    }
  }
}

void write_json(std::ostream& os, const std::vector<SeriesRecord>& records, const Meta& meta) {
  Meta doc;
  doc["meta"] = merged_meta(records, meta);
  Meta rows = Meta::array();
  const bool multi = records.size() > 1;
  for (const auto& rec : records) {
    for (std::size_t i = 0; i < rec.size(); ++i) {
      Meta row;
      if (multi) row["record"] = rec.label;
      row[rec.abscissa_name] = rec.abscissa[i];
      for (std::size_t c = 0; c < rec.columns.size(); ++c) row[rec.columns[c]] = rec.rows[i][c];
      rows.push_back(std::move(row));
    }
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << '\n';
}

void write_records(std::ostream& os, OutputFormat format, const std::vector<SeriesRecord>& records,
                   const Meta& meta) {
  if (format == OutputFormat::json) {
    write_json(os, records, meta);
  } else {
    write_csv(os, records, meta);
  }
}

}  // namespace qwalk
