#include "dickman/report.hpp"

#include <doctest.h>

#include <sstream>
#include <stdexcept>

using namespace dickman;

TEST_CASE("CSV output")
{
  Report r{"demo", {}, {"n", "value", "label"}};
  r.add_row({std::int64_t{3}, 0.1, std::string("a")});
  r.add_row({std::int64_t{-1}, 1.0 / 3.0, std::string("b")});
  std::ostringstream out;
  r.write(out, ReportFormat::csv);
  CHECK(out.str() == "n,value,label\n3,0.10000000000000001,a\n-1,0.33333333333333331,b\n");
}

TEST_CASE("JSON output carries the config")
{
  Report r{"demo", {}, {"n", "value"}};
  r.config["seed"] = 7;
  r.manifest["wall_time_s"] = 0.5;
  r.add_row({std::int64_t{1}, 2.5});
  std::ostringstream out;
  r.write(out, ReportFormat::json);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["command"] == "demo");
  CHECK(j["config"]["seed"] == 7);
  CHECK(j["rows"][0]["n"] == 1);
  CHECK(j["rows"][0]["value"] == 2.5);
  CHECK(j["wall_time_s"] == 0.5);
}

TEST_CASE("format helpers")
{
  CHECK(format_double(0.5) == "0.5");
  CHECK(std::stod(format_double(0.1)) == 0.1);
  CHECK(parse_report_format("json") == ReportFormat::json);
  CHECK_THROWS_AS(parse_report_format("xml"), std::invalid_argument);
  Report r{"demo", {}, {"a"}};
  CHECK_THROWS_AS(r.add_row({1.0, 2.0}), std::logic_error);
}
