#include "dickman/audits.hpp"

#include "dickman/exact_dist.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dickman {

namespace {

double safe_ratio(double lhs, double envelope)
{
  return envelope > 0.0 ? lhs / envelope : 0.0;
}

} // namespace

std::vector<AuditRow> llt_table(const KappaSeq &kappa, std::span<const int> n_list, const RhoTable &table)
{
  if (n_list.empty())
    return {};
  const double x = kappa.x();
  if (x > table.x_max())
    throw std::out_of_range(fmt::format("llt_table: rho({}) is beyond the table end {}", x, table.x_max()));
  for (int n : n_list)
    if (n < 1)
      throw std::invalid_argument("llt_table: every n must be >= 1");

  const int n_max = *std::max_element(n_list.begin(), n_list.end());
  const std::vector<double> hits = hit_probabilities(kappa, n_max);
  const double target = table.density(x);

  std::vector<AuditRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    AuditRow r;
    r.n = n;
    r.x = x;
    r.kappa_n = kappa(n);
    r.lhs = n * hits[n];
    r.envelope = target;
    r.ratio = safe_ratio(r.lhs, target);
    r.error = std::abs(r.lhs - target);
    r.label = "llt";
    rows.push_back(std::move(r));
  }
  return rows;
}

AuditRow stimabase_check(int m, int n, const KappaSeq &kappa)
{
  if (m < 2 || n <= m)
    throw std::invalid_argument(fmt::format("stimabase: need n > m >= 2, got m={} n={}", m, n));
  const std::int64_t km = kappa(m);
  const std::int64_t kn = kappa(n);
  const std::int64_t d = kn - km;
  if (d <= 0)
    throw std::invalid_argument(fmt::format("stimabase: degenerate kappa, kappa_n - kappa_m = {}", d));

  const std::vector<double> probs = pmf_prefix(m, n, d);
  double window = 0.0;
  for (std::int64_t v = std::max<std::int64_t>(0, d - n + 1); v <= d - (m + 1); ++v)
    window += probs[v];

  AuditRow r;
  r.m = m;
  r.n = n;
  r.x = kappa.x();
  r.kappa_m = km;
  r.kappa_n = kn;
  r.lhs = std::abs(static_cast<double>(d) * probs[d] - window);
  r.envelope = (1.0 + std::log(static_cast<double>(n) / m)) / std::sqrt(static_cast<double>(n - m));
  r.ratio = safe_ratio(r.lhs, r.envelope);
  r.label = "stimabase";
  return r;
}

AuditRow w2_check(int m, int n, const Envelope &env, const RhoTable &table)
{
  if (env.m != m || env.n != n)
    throw std::invalid_argument("w2_check: envelope indices do not match (m, n)");
  const EnvelopeValue g = g_envelope(env);
  AuditRow r;
  r.m = m;
  r.n = n;
  r.lhs = kolmogorov_distance(pmf(m, n), table);
  r.envelope = g.value;
  r.ratio = safe_ratio(r.lhs, r.envelope);
  r.label = g.vacuous ? "w2:vacuous" : "w2";
  return r;
}

AuditRow w1_check(const Envelope &env, std::span<const double> ts)
{
  AuditRow r;
  r.m = env.m;
  r.n = env.n;
  r.label = "w1";
  const double gap = env.n - env.m;
  for (double t : ts) {
    if (t == 0.0)
      continue;
    const double lhs = std::abs(phi_T(env.m, env.n, t / gap) - phi_dickman(t));
    const double f = f_envelope(env, t);
    const double ratio = safe_ratio(lhs, f);
    if (ratio >= r.ratio) {
      r.lhs = lhs;
      r.envelope = f;
      r.ratio = ratio;
      r.label = fmt::format("w1:t={}", t);
    }
  }
  return r;
}

double w1_required_constant(int m, int n, std::span<const double> ts)
{
  const Envelope unit = Envelope::make(m, n, 1.0);
  const double gap = n - m;
  double worst = 0.0;
  for (double t : ts) {
    if (t == 0.0)
      continue;
    const double lhs = std::abs(phi_T(m, n, t / gap) - phi_dickman(t));
    // f = expm1(C a t^2) and f_envelope(unit, t) = expm1(a t^2)
    const double a_t2 = std::log1p(f_envelope(unit, t));
    worst = std::max(worst, std::log1p(lhs) / a_t2);
  }
  return worst;
}

AuditRow gamma_sup_check(int m, int n, int points)
{
  if (points < 2)
    throw std::invalid_argument("gamma_sup_check: need at least 2 points");
  double sup = 0.0;
  for (int i = 0; i < points; ++i) {
    const double u = -std::numbers::pi + 2.0 * std::numbers::pi * i / (points - 1);
    sup = std::max(sup, std::abs(gamma_mn(m, n, u)));
  }
  AuditRow r;
  r.m = m;
  r.n = n;
  r.lhs = sup;
  r.envelope = (1.0 + std::log(static_cast<double>(n) / m)) / (n - m);
  r.ratio = safe_ratio(r.lhs, r.envelope);
  r.label = "gamma_sup";
  return r;
}

AuditRow zs_check(int n, const RhoTable &table)
{
  AuditRow r;
  r.n = n;
  r.lhs = l2_cf_integral(n);
  r.envelope = l2_cf_limit(table);
  r.ratio = safe_ratio(r.lhs, r.envelope);
  r.error = std::abs(r.lhs - r.envelope);
  r.label = "zs";
  return r;
}

double sigma_eps(double x, double eps)
{
  return (1.0 + x * (1.0 - eps)) / (x * (1.0 + eps));
}

bool lemmino_check(const KappaSeq &kappa, double eps, int m, int n)
{
  const double x = kappa.x();
  if (!(eps > 0.0 && eps < 1.0 / (2.0 * x)))
    throw std::invalid_argument(fmt::format("lemmino: need 0 < eps < 1/(2x) = {}, got {}", 1.0 / (2.0 * x), eps));
  if (m < 1 || n <= m)
    throw std::invalid_argument(fmt::format("lemmino: need 1 <= m < n, got m={} n={}", m, n));
  for (int j : {m, n}) {
    const double kj = static_cast<double>(kappa(j));
    if (!(x * j * (1.0 - eps) < kj && kj < x * j * (1.0 + eps)))
      throw std::invalid_argument(
          fmt::format("lemmino: kappa_{} = {} is not within eps of x*{}; m is below the threshold m0", j, kj, j));
  }
  const double sigma = sigma_eps(x, eps);
  if (!(static_cast<double>(n) < sigma * m))
    throw std::invalid_argument(fmt::format("lemmino: n={} is outside the band n < sigma m = {}", n, sigma * m));

  const std::int64_t d = kappa(n) - kappa(m);
  if (d < 0)
    return false;
  return pmf_prefix(m, n, d)[d] == 0.0;
}

std::vector<AuditRow> covariance_audit(const KappaSeq &kappa, std::span<const std::pair<int, int>> pairs,
                                       double c_const, double eps)
{
  const double x = kappa.x();
  const double sigma = sigma_eps(x, eps);
  std::vector<AuditRow> rows;
  rows.reserve(pairs.size());
  for (auto [m, n] : pairs) {
    AuditRow r;
    r.m = m;
    r.n = n;
    r.x = x;
    r.kappa_m = kappa(m);
    r.kappa_n = kappa(n);
    r.lhs = std::abs(cov_Y(kappa, m, n));
    if (m == n) {
      r.label = "diagonal";
      r.envelope = m;
    } else if (static_cast<double>(n) <= sigma * m) {
      r.label = "near";
      r.envelope = 1.0;
    } else {
      r.label = "far";
      const Envelope env = Envelope::make(m, n, c_const);
      const Envelope env2 = Envelope::make(2, n, c_const);
      const double gap = n - m;
      r.envelope = n / gap * chi(env, kappa, x) + m / gap + chi(env2, kappa, x) + 1.0 / n;
    }
    r.ratio = safe_ratio(r.lhs, r.envelope);
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace grids {

std::vector<double> slopes()
{
  return {0.5, 1.0, 1.5, 2.0, 3.0};
}

std::vector<std::pair<int, int>> stimabase_pairs()
{
  std::vector<std::pair<int, int>> out;
  for (int m : {2, 5, 10, 20}) {
    for (int n = 4 * m; n <= 1000; n *= 2)
      out.emplace_back(m, n);
    if (out.back().second != 1000)
      out.emplace_back(m, 1000);
  }
  return out;
}

std::vector<std::pair<int, int>> w1_pairs()
{
  return {{2, 10}, {2, 40}, {2, 160}, {5, 20}, {5, 80}, {10, 40}, {10, 160}};
}

std::vector<double> w1_ts()
{
  std::vector<double> ts;
  for (int i = -20; i <= 20; ++i)
    if (i != 0)
      ts.push_back(0.25 * i);
  return ts;
}

std::vector<std::pair<int, int>> w2_pairs()
{
  std::vector<std::pair<int, int>> out;
  for (int m : {2, 3, 5, 10})
    for (int n : {20, 40, 100, 200, 400})
      out.emplace_back(m, n);
  return out;
}

std::vector<std::pair<int, int>> gamma_pairs()
{
  std::vector<std::pair<int, int>> out;
  for (int m : {2, 5, 10, 20})
    for (int n = 2 * m; n <= 2000; n *= 2)
      out.emplace_back(m, n);
  return out;
}

double covariance_eps(double x)
{
  return std::min(0.05, 0.25 / x);
}

std::vector<std::pair<int, int>> covariance_pairs(double x, double eps)
{
  const double sigma = sigma_eps(x, eps);
  std::vector<std::pair<int, int>> out;
  for (int m : {2, 3, 5, 10, 20, 50, 100, 200})
    out.emplace_back(m, m);
  for (int m : {10, 20, 50, 100, 200}) {
    const int top = static_cast<int>(std::floor(sigma * m));
    for (int n : {m + 1, (m + top) / 2, top})
      if (n > m && n <= sigma * m && (out.back() != std::pair{m, n}))
        out.emplace_back(m, n);
  }
  for (int m : {2, 3, 5, 10, 20, 50})
    for (int n = 2 * m; n <= 2000; n *= 2)
      out.emplace_back(m, n);
  return out;
}

} // namespace grids

} // namespace dickman
