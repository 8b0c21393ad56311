#include "dickman/report.hpp"

#include <fmt/format.h>

#include <ostream>
#include <stdexcept>

namespace dickman {

ReportFormat parse_report_format(std::string_view name)
{
  if (name == "csv")
    return ReportFormat::csv;
  if (name == "json")
    return ReportFormat::json;
  throw std::invalid_argument(fmt::format("unknown report format '{}'", name));
}

std::string format_double(double v)
{
  return fmt::format("{:.17g}", v);
}

void Report::add_row(std::vector<Cell> row)
{
  if (row.size() != columns.size())
    throw std::logic_error(fmt::format("report {}: row has {} cells for {} columns", command, row.size(),
                                       columns.size()));
  rows.push_back(std::move(row));
}

void Report::write(std::ostream &out, ReportFormat format) const
{
  if (format == ReportFormat::csv) {
    for (std::size_t i = 0; i < columns.size(); ++i)
      out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto &row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i)
          out << ',';
        std::visit(
            [&](const auto &v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, double>)
                out << format_double(v);
              else
                out << v;
            },
            row[i]);
      }
      out << '\n';
    }
    return;
  }

  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["config"] = config;
  auto &jrows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto &row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i)
      std::visit([&](const auto &v) { obj[columns[i]] = v; }, row[i]);
    jrows.push_back(std::move(obj));
  }
  for (const auto &[k, v] : manifest.items())
    doc[k] = v;
  out << doc.dump(2) << '\n';
}

} // namespace dickman
