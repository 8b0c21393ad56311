#include "dickman/exact_dist.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace dickman {

namespace {

std::int64_t support_max(int m, int n)
{
  const auto a = static_cast<std::int64_t>(m);
  const auto b = static_cast<std::int64_t>(n);
  return b * (b + 1) / 2 - a * (a + 1) / 2;
}

void check_indices(int m, int n)
{
  if (m < 0 || n <= m)
    throw std::invalid_argument(fmt::format("pmf: need 0 <= m < n, got m={} n={}", m, n));
}

// One Bernoulli(1/k) step on probs[0..hi]; values above hi are dropped.
void dp_step(std::vector<double> &probs, int k, std::int64_t hi)
{
  const double stay = static_cast<double>(k - 1) / k;
  const double jump = 1.0 / k;
  for (std::int64_t v = hi; v >= k; --v)
    probs[v] = probs[v] * stay + probs[v - k] * jump;
  for (std::int64_t v = std::min<std::int64_t>(hi, k - 1); v >= 0; --v)
    probs[v] *= stay;
}

} // namespace

Rational Pmf::exact_at(std::int64_t v) const
{
  if (mode_ != PmfMode::exact_rational)
    throw std::logic_error("pmf: exact_at needs an exact-rational pmf");
  if (v < 0 || v > max_value())
    return Rational(0);
  return Rational(numerators_[v], denominator_);
}

Pmf pmf(int m, int n, PmfMode mode)
{
  check_indices(m, n);
  if (mode == PmfMode::exact_rational && n > kExactPmfMaxN)
    throw std::invalid_argument(fmt::format("pmf: exact-rational mode is capped at n <= {}", kExactPmfMaxN));

  const std::int64_t top = support_max(m, n);
  Pmf out;
  out.m_ = m;
  out.n_ = n;
  out.mode_ = mode;

  if (mode == PmfMode::floating) {
    out.probs_.assign(top + 1, 0.0);
    out.probs_[0] = 1.0;
    std::int64_t hi = 0;
    for (int k = m + 1; k <= n; ++k) {
      hi += k;
      dp_step(out.probs_, k, hi);
    }
    return out;
  }

  out.numerators_.assign(top + 1, BigInt(0));
  out.numerators_[0] = 1;
  std::int64_t hi = 0;
  for (int k = m + 1; k <= n; ++k) {
    hi += k;
    for (std::int64_t v = hi; v >= k; --v)
      out.numerators_[v] = out.numerators_[v] * (k - 1) + out.numerators_[v - k];
    for (std::int64_t v = std::min<std::int64_t>(hi, k - 1); v >= 0; --v)
      out.numerators_[v] *= (k - 1);
    out.denominator_ *= k;
  }
  out.probs_.resize(top + 1);
  for (std::int64_t v = 0; v <= top; ++v)
    out.probs_[v] = static_cast<double>(Rational(out.numerators_[v], out.denominator_));
  return out;
}

std::vector<double> pmf_prefix(int m, int n, std::int64_t v_max)
{
  check_indices(m, n);
  if (v_max < 0)
    throw std::invalid_argument("pmf_prefix: v_max must be non-negative");
  const std::int64_t cap = std::min(v_max, support_max(m, n));
  std::vector<double> probs(v_max + 1, 0.0);
  probs[0] = 1.0;
  std::int64_t hi = 0;
  for (int k = m + 1; k <= n; ++k) {
    hi = std::min(hi + k, cap);
    dp_step(probs, k, hi);
  }
  return probs;
}

double point_probability(int m, int n, std::int64_t v)
{
  check_indices(m, n);
  if (v < 0 || v > support_max(m, n))
    return 0.0;
  return pmf_prefix(m, n, v)[v];
}

double prob_at(const Pmf &p, std::int64_t v)
{
  if (v < 0 || v > p.max_value())
    return 0.0;
  return p.probs()[v];
}

double scaled_cdf(const Pmf &p, double x)
{
  const double threshold = x * (p.n() - p.m());
  if (threshold < 0.0)
    return 0.0;
  const auto probs = p.probs();
  const std::int64_t last = threshold >= static_cast<double>(p.max_value())
                                ? p.max_value()
                                : static_cast<std::int64_t>(std::floor(threshold));
  double sum = 0.0;
  for (std::int64_t v = 0; v <= last; ++v)
    sum += probs[v];
  return std::min(sum, 1.0);
}

double kolmogorov_distance(const Pmf &p, const RhoTable &table)
{
  const double scale = p.n() - p.m();
  const double reach = static_cast<double>(p.max_value()) / scale;
  if (reach > table.x_max())
    throw std::out_of_range(
        fmt::format("kolmogorov_distance: table reaches {} but the support needs {}", table.x_max(), reach));

  const auto probs = p.probs();
  double below = 0.0;  // P(T < v)
  double worst = 0.0;
  for (std::int64_t v = 0; v <= p.max_value(); ++v) {
    if (probs[v] == 0.0)
      continue;
    const double d = table.cdf(static_cast<double>(v) / scale);
    const double upto = std::min(below + probs[v], 1.0);
    worst = std::max({worst, std::abs(below - d), std::abs(upto - d)});
    below = upto;
  }
  return worst;
}

double power_sum(const Pmf &p)
{
  double s = 0.0;
  for (double q : p.probs())
    s += q * q;
  return s;
}

std::vector<double> convolve(std::span<const double> a, std::span<const double> b)
{
  if (a.empty() || b.empty())
    return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<double> hit_probabilities(const KappaSeq &kappa, int n_max)
{
  if (n_max < 1)
    throw std::invalid_argument("hit_probabilities: n_max must be >= 1");
  std::int64_t v_max = 0;
  for (int n = 1; n <= n_max; ++n)
    v_max = std::max(v_max, kappa(n));

  std::vector<double> probs(v_max + 1, 0.0);
  std::vector<double> hits(n_max + 1, 0.0);
  probs[0] = 1.0;
  std::int64_t hi = 0;
  for (int k = 1; k <= n_max; ++k) {
    hi = std::min(hi + k, v_max);
    dp_step(probs, k, hi);
    const std::int64_t target = kappa(k);
    hits[k] = target >= 0 && target <= v_max ? probs[target] : 0.0;
  }
  return hits;
}

double cov_Y(const KappaSeq &kappa, int m, int n)
{
  if (m < 2 || n < m)
    throw std::invalid_argument(fmt::format("cov_Y: need 2 <= m <= n, got m={} n={}", m, n));
  const std::int64_t km = kappa(m);
  const std::int64_t kn = kappa(n);
  if (kn - km < 0)
    throw std::invalid_argument(fmt::format("cov_Y: kappa_n - kappa_m = {} is negative", kn - km));

  const double pm = point_probability(0, m, km);
  if (m == n)
    return static_cast<double>(m) * m * (pm - pm * pm);
  const double increment = point_probability(m, n, kn - km);
  const double pn = point_probability(0, n, kn);
  return (m * pm) * (n * increment - n * pn);
}

void write_csv(const Pmf &p, std::ostream &out)
{
  out << "value,probability\n";
  const auto probs = p.probs();
  for (std::int64_t v = 0; v <= p.max_value(); ++v) {
    if (probs[v] == 0.0)
      continue;
    fmt::print(out, "{},{:.17g}\n", v, probs[v]);
  }
}

} // namespace dickman
