#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dickman {

enum class KappaMode { floor, round, exact_multiple };

KappaMode parse_kappa_mode(std::string_view name);
std::string_view to_string(KappaMode mode);

/// Integer target sequence kappa_n ~ x n.
///
/// The slope is held as a reduced fraction num/den fixed at construction, so
/// kappa_n is computed with integer arithmetic and never drifts with n.
/// exact_multiple requires an integer slope (kappa_n = x n).
class KappaSeq {
public:
  static KappaSeq from_rational(std::int64_t num, std::int64_t den, KappaMode mode = KappaMode::floor);
  /// Accepts "2", "1.5", "0.125" or "3/2".
  static KappaSeq from_decimal(std::string_view text, KappaMode mode = KappaMode::floor);
  /// Goes through the shortest round-trip decimal form of x, so 0.1 is 1/10.
  static KappaSeq from_double(double x, KappaMode mode = KappaMode::floor);

  double x() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  KappaMode mode() const { return mode_; }

  std::int64_t operator()(std::int64_t n) const;

  /// floor(x n) and round(x n) are strictly increasing in n only when x >= 1.
  bool strictly_increasing() const { return num_ >= den_; }

  std::string describe() const;

private:
  friend class KappaCursor;
  KappaSeq(std::int64_t num, std::int64_t den, KappaMode mode) : num_(num), den_(den), mode_(mode) {}

  std::int64_t num_;
  std::int64_t den_;
  KappaMode mode_;
};

/// Walks kappa_1, kappa_2, ... with one addition and a compare per step.
/// kappa_n = floor((a n + b)/d) with a, b, d fixed by the mode.
class KappaCursor {
public:
  explicit KappaCursor(const KappaSeq &kappa);

  /// Advances to the next n and returns kappa_n; the first call gives kappa_1.
  std::int64_t next();
  std::int64_t index() const { return n_; }

private:
  std::int64_t n_ = 0;
  std::int64_t step_quot_;
  std::int64_t step_rem_;
  std::int64_t div_;
  std::int64_t quot_;
  std::int64_t rem_;
};

} // namespace dickman
