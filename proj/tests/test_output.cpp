#include <doctest.h>

#include <sstream>

#include "qwalk/output.hpp"

using namespace qwalk;

namespace {

SeriesRecord sample(const std::string& label) {
  SeriesRecord rec;
  rec.label = label;
  rec.abscissa_name = "n";
  rec.columns = {"p", "q"};
  rec.meta["psi0"] = "1,0,0";
  rec.add_row(-1.0, {0.25, 1.0 / 3.0});
  rec.add_row(2.0, {0.5, -1e-300});
  return rec;
}

}  // namespace

TEST_CASE("number format keeps 17 significant digits") {
  CHECK(format_number(1.0 / 3.0) == "3.3333333333333331e-01");
  CHECK(format_number(0.0) == "0.0000000000000000e+00");
  CHECK(std::stod(format_number(0.1)) == 0.1);
}

TEST_CASE("csv layout") {
  Meta meta;
  meta["tool"] = "qwalk";
  meta["t"] = 5;
  std::ostringstream os;
  write_csv(os, {sample("a")}, meta);
  CHECK(os.str() ==
        "# tool: qwalk\n"
        "# t: 5\n"
        "# psi0: 1,0,0\n"
        "n,p,q\n"
        "-1.0000000000000000e+00,2.5000000000000000e-01,3.3333333333333331e-01\n"
        "2.0000000000000000e+00,5.0000000000000000e-01,-1.0000000000000000e-300\n");
}

TEST_CASE("csv with several records") {
  std::ostringstream os;
  write_csv(os, {sample("a"), sample("b")}, Meta::object());
  const std::string s = os.str();
  CHECK(s.find("# a.psi0: 1,0,0\n# b.psi0: 1,0,0\n") != std::string::npos);
  CHECK(s.find("record,n,p,q\n0,-1.0") != std::string::npos);
  CHECK(s.find("\n1,2.0000000000000000e+00,") != std::string::npos);
}

TEST_CASE("json layout") {
  Meta meta;
  meta["version"] = kVersion;
  std::ostringstream os;
  write_records(os, OutputFormat::json, {sample("a")}, meta);
  const Meta doc = Meta::parse(os.str());
  CHECK(doc["meta"]["version"] == kVersion);
  CHECK(doc["meta"]["psi0"] == "1,0,0");
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["n"] == -1.0);
  CHECK(doc["rows"][0]["q"].get<double>() == 1.0 / 3.0);
  CHECK(doc["rows"][1]["p"] == 0.5);
}

TEST_CASE("output is deterministic") {
  std::ostringstream a, b;
  write_records(a, OutputFormat::json, {sample("x"), sample("y")}, Meta::object());
  write_records(b, OutputFormat::json, {sample("x"), sample("y")}, Meta::object());
  CHECK(a.str() == b.str());
  std::ostringstream c, d;
  write_records(c, OutputFormat::csv, {sample("x")}, Meta::object());
  write_records(d, OutputFormat::csv, {sample("x")}, Meta::object());
  CHECK(c.str() == d.str());
}
