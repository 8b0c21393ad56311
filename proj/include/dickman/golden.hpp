#pragma once

#include "dickman/audits.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace dickman {

/// FNV-1a over the identifiers of every row plus the grid version, as 16 hex
/// digits. Only the grid enters the hash, never the measured values.
std::string grid_hash(std::span<const AuditRow> rows, std::string_view version = grids::kGridVersion);

struct GoldenEntry {
  double constant = 0.0;
  std::string grid_hash;
};

/// Calibrated constant of one audit: the largest ratio on its grid.
struct Calibration {
  std::string name;
  GoldenEntry entry;
};

Calibration calibrate(std::string name, std::span<const AuditRow> rows);

enum class GoldenStatus { ok, regression, grid_mismatch, missing };

std::string_view to_string(GoldenStatus status);

/// JSON map from audit name to {"constant": ..., "grid_hash": ...}.
class GoldenFile {
public:
  /// A missing file loads as empty.
  static GoldenFile load(const std::filesystem::path &path);
  void save(const std::filesystem::path &path) const;

  std::optional<GoldenEntry> find(std::string_view name) const;
  void set(const Calibration &c) { entries_[c.name] = c.entry; }
  const std::map<std::string, GoldenEntry, std::less<>> &entries() const { return entries_; }

  /// A constant may not grow beyond the recorded one (relative slack
  /// `rel_slack`), and the grid hash must match.
  GoldenStatus check(const Calibration &c, double rel_slack = 1e-9) const;

private:
  std::map<std::string, GoldenEntry, std::less<>> entries_;
};

} // namespace dickman
