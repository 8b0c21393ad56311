#pragma once

#include "dickman/kappa.hpp"
#include "dickman/rho_table.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace dickman {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class PmfMode { floating, exact_rational };

// Largest n accepted in exact-rational mode.
inline constexpr int kExactPmfMaxN = 64;

/// Law of T_m^n = sum_{k=m+1}^n k Z_k with independent Z_k ~ Bernoulli(1/k).
///
/// probs()[v] = P(T_m^n = v) for v = 0..S, S = sum_{k=m+1}^n k. In exact
/// mode the numerators over the common denominator prod_{k=m+1}^n k are kept
/// as well and probs() holds their rounded values.
class Pmf {
public:
  int m() const { return m_; }
  int n() const { return n_; }
  PmfMode mode() const { return mode_; }
  std::int64_t max_value() const { return static_cast<std::int64_t>(probs_.size()) - 1; }
  std::span<const double> probs() const { return probs_; }

  /// Exact mode only.
  std::span<const BigInt> numerators() const { return numerators_; }
  const BigInt &denominator() const { return denominator_; }
  Rational exact_at(std::int64_t v) const;

  friend Pmf pmf(int m, int n, PmfMode mode);

private:
  int m_ = 0;
  int n_ = 0;
  PmfMode mode_ = PmfMode::floating;
  std::vector<double> probs_;
  std::vector<BigInt> numerators_;
  BigInt denominator_ = 1;
};

/// Dynamic-programming convolution over k = m+1..n. Throws
/// std::invalid_argument for m < 0, m >= n, or exact mode with n > 64.
Pmf pmf(int m, int n, PmfMode mode = PmfMode::floating);

/// P(T_m^n = v) for v = 0..v_max only. The DP never moves mass downwards, so
/// this is the same law restricted to a prefix, at O((n - m) v_max) cost.
std::vector<double> pmf_prefix(int m, int n, std::int64_t v_max);

/// P(T_m^n = v) via pmf_prefix.
double point_probability(int m, int n, std::int64_t v);

/// Zero off the support.
double prob_at(const Pmf &p, std::int64_t v);

/// P(T_m^n / (n - m) <= x).
double scaled_cdf(const Pmf &p, double x);

/// sup_x |P(T_m^n/(n-m) <= x) - D(x)|, checked on both sides of every atom.
/// Throws std::out_of_range if the table does not reach S/(n-m).
double kolmogorov_distance(const Pmf &p, const RhoTable &table);

/// sum_v P(T = v)^2.
double power_sum(const Pmf &p);

std::vector<double> convolve(std::span<const double> a, std::span<const double> b);

/// P(T_n = kappa_n) for n = 1..n_max (index 0 unused), from one truncated DP.
std::vector<double> hit_probabilities(const KappaSeq &kappa, int n_max);

/// Cov(Y_m, Y_n) with Y_n = n 1{T_n = kappa_n}, 2 <= m <= n, split through the
/// independent increment T_m^n.
double cov_Y(const KappaSeq &kappa, int m, int n);

/// "value,probability" rows with a header, 17 significant digits, zero-mass
/// values skipped.
void write_csv(const Pmf &p, std::ostream &out);

} // namespace dickman
