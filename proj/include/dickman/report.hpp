#pragma once

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dickman {

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(std::string_view name);

using Cell = std::variant<std::int64_t, double, std::string>;

/// Tabular report. CSV has a header row and prints doubles with 17
/// significant digits; JSON is {"command", "config", "rows", ...} where each
/// row is an object keyed by column. `manifest` entries are appended to the
/// JSON top level only.
struct Report {
  Report(std::string command, nlohmann::ordered_json config, std::vector<std::string> columns)
      : command(std::move(command)), config(std::move(config)), columns(std::move(columns))
  {
    if (this->config.is_null())
      this->config = nlohmann::ordered_json::object();
  }

  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json manifest = nlohmann::ordered_json::object();

  void add_row(std::vector<Cell> row);
  void write(std::ostream &out, ReportFormat format) const;
};

std::string format_double(double v);

} // namespace dickman
