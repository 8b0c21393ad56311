#include "dickman/spectral.hpp"

#include "dickman/cumulants.hpp"
#include "dickman/exact_dist.hpp"
#include "dickman/quadrature.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dickman {

namespace {

void check_envelope_indices(int m, int n)
{
  if (m < 2 || n <= m)
    throw std::invalid_argument(fmt::format("envelope: need n > m >= 2, got m={} n={}", m, n));
}

} // namespace

Complex phi_Z(int k, double t)
{
  if (k < 1)
    throw std::invalid_argument("phi_Z: need k >= 1");
  return 1.0 + (std::polar(1.0, t) - 1.0) / static_cast<double>(k);
}

Complex phi_T(int m, int n, double t)
{
  if (m < 0 || n <= m)
    throw std::invalid_argument(fmt::format("phi_T: need 0 <= m < n, got m={} n={}", m, n));
  Complex prod = 1.0;
  for (int k = m + 1; k <= n; ++k)
    prod *= phi_Z(k, t * k);
  return prod;
}

Complex phi_dickman(double t)
{
  if (!std::isfinite(t))
    throw std::invalid_argument("phi_dickman: t must be finite");
  if (t == 0.0)
    return 1.0;
  // (e^{itu} - 1)/u with the cancellation in cos(tu) - 1 removed; the limit at 0 is it.
  const auto integrand = [t](double u) -> Complex {
    if (u == 0.0)
      return {0.0, t};
    const double s = std::sin(0.5 * t * u);
    return {-2.0 * s * s / u, std::sin(t * u) / u};
  };
  const int panels = std::max(8, static_cast<int>(std::ceil(std::abs(t))) * 2);
  return std::exp(adaptive_simpson(integrand, 0.0, 1.0, 1e-12, panels));
}

Complex gamma_mn(int m, int n, double u)
{
  check_envelope_indices(m, n);
  Complex sum = 0.0;
  for (int k = m + 1; k <= n; ++k) {
    const Complex e = std::polar(1.0, u * k);
    sum += e * (1.0 - e) / (static_cast<double>(k - 1) + e);
  }
  return sum / static_cast<double>(n - m);
}

Complex gamma_series(int m, int n, double t, int J)
{
  check_envelope_indices(m, n);
  if (J < 1)
    throw std::invalid_argument("gamma_series: need J >= 1");
  Complex sum = 0.0;
  Complex coef = 1.0;  // (it)^{j-1}/(j-1)!
  for (int j = 1; j <= J; ++j) {
    if (j > 1)
      coef *= Complex(0.0, t) / static_cast<double>(j - 1);
    sum += coef * alpha_j(m, n, j);
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
      throw std::domain_error(fmt::format("gamma_series: partial sum diverged at j={} (t={})", j, t));
  }
  return sum;
}

Envelope Envelope::make(int m, int n, double c_const)
{
  check_envelope_indices(m, n);
  if (!std::isfinite(c_const) || c_const <= 0.0)
    throw std::invalid_argument("envelope: calibration constant must be finite and positive");
  return {m, n, c_const};
}

double f_envelope(const Envelope &env, double t)
{
  const double gap = env.n - env.m;
  const double lg = std::log(static_cast<double>(env.n) / env.m);
  return std::expm1(env.c_const * t * t * (lg / (gap * gap) + (env.m + 2) / gap));
}

EnvelopeValue g_envelope(const Envelope &env)
{
  const double gap = env.n - env.m;
  const double lg = std::log(static_cast<double>(env.n) / env.m);
  const double v = std::expm1(env.c_const * (lg / (gap * gap) + (env.m + 2) / gap) * lg * lg) + 1.0 / lg;
  return {v, v > 1.0};
}

double chi(const Envelope &env, const KappaSeq &kappa, double x)
{
  const std::int64_t dk = kappa(env.n) - kappa(env.m);
  if (dk <= 0)
    throw std::invalid_argument(
        fmt::format("chi: need kappa_n > kappa_m, got kappa_{}={} kappa_{}={}", env.m, kappa(env.m), env.n,
                    kappa(env.n)));
  const double gap = env.n - env.m;
  const double r = gap / static_cast<double>(dk);
  const double lg = std::log(static_cast<double>(env.n) / env.m);
  return r * lg / std::sqrt(gap) + r * g_envelope(env).value + x * std::abs(r - 1.0 / x) +
         (env.m + 1) / static_cast<double>(dk);
}

double l2_cf_integral(int n)
{
  if (n < 1)
    throw std::invalid_argument("l2_cf_integral: need n >= 1");
  return 2.0 * std::numbers::pi * n * power_sum(pmf(0, n));
}

double l2_cf_integral_direct(int n, double abs_tol)
{
  if (n < 1)
    throw std::invalid_argument("l2_cf_integral_direct: need n >= 1");
  const auto integrand = [n](double u) { return std::norm(phi_T(0, n, u / n)); };
  const double half = adaptive_simpson(integrand, 0.0, std::numbers::pi * n, 0.5 * abs_tol, 16 * n);
  return 2.0 * half;
}

double l2_cf_limit(const RhoTable &table)
{
  return 2.0 * std::numbers::pi * std::exp(-2.0 * kEulerGamma) * table.rho_sq_integral(table.x_max());
}

} // namespace dickman
