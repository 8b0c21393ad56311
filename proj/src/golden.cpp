#include "dickman/golden.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace dickman {

namespace {

struct Fnv1a {
  std::uint64_t state = 0xcbf29ce484222325ULL;
  void feed(std::string_view s)
  {
    for (unsigned char c : s) {
      state ^= c;
      state *= 0x100000001b3ULL;
    }
  }
};

} // namespace

std::string grid_hash(std::span<const AuditRow> rows, std::string_view version)
{
  Fnv1a h;
  h.feed(version);
  for (const AuditRow &r : rows)
    h.feed(fmt::format(";{},{},{:.17g},{},{},{}", r.m, r.n, r.x, r.kappa_m, r.kappa_n, r.label));
  return fmt::format("{:016x}", h.state);
}

Calibration calibrate(std::string name, std::span<const AuditRow> rows)
{
  double worst = 0.0;
  for (const AuditRow &r : rows)
    worst = std::max(worst, r.ratio);
  return {std::move(name), {worst, grid_hash(rows)}};
}

std::string_view to_string(GoldenStatus status)
{
  switch (status) {
  case GoldenStatus::ok:
    return "ok";
  case GoldenStatus::regression:
    return "regression";
  case GoldenStatus::grid_mismatch:
    return "grid-mismatch";
  case GoldenStatus::missing:
    return "missing";
  }
  return "?";
}

GoldenFile GoldenFile::load(const std::filesystem::path &path)
{
  GoldenFile g;
  std::ifstream in(path);
  if (!in)
    return g;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception &e) {
    throw std::runtime_error(fmt::format("golden file {}: {}", path.string(), e.what()));
  }
  if (!doc.is_object())
    throw std::runtime_error(fmt::format("golden file {}: top level must be an object", path.string()));
  for (const auto &[name, value] : doc.items()) {
    if (!value.contains("constant") || !value.contains("grid_hash"))
      throw std::runtime_error(fmt::format("golden file {}: entry '{}' is incomplete", path.string(), name));
    g.entries_[name] = {value.at("constant").get<double>(), value.at("grid_hash").get<std::string>()};
  }
  return g;
}

void GoldenFile::save(const std::filesystem::path &path) const
{
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto &[name, e] : entries_)
    doc[name] = {{"constant", e.constant}, {"grid_hash", e.grid_hash}};
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error(fmt::format("cannot write golden file {}", path.string()));
  out << doc.dump(2) << '\n';
}

std::optional<GoldenEntry> GoldenFile::find(std::string_view name) const
{
  if (auto it = entries_.find(name); it != entries_.end())
    return it->second;
  return std::nullopt;
}

GoldenStatus GoldenFile::check(const Calibration &c, double rel_slack) const
{
  const auto recorded = find(c.name);
  if (!recorded)
    return GoldenStatus::missing;
  if (recorded->grid_hash != c.entry.grid_hash)
    return GoldenStatus::grid_mismatch;
  if (c.entry.constant > recorded->constant * (1.0 + rel_slack))
    return GoldenStatus::regression;
  return GoldenStatus::ok;
}

} // namespace dickman
