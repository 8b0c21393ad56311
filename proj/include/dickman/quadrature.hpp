#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace dickman {

namespace detail {

template <class F, class T>
T simpson_step(const F &f, double a, double b, T fa, T fm, T fb, T whole, double tol, int depth)
{
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const T flm = f(lm);
  const T frm = f(rm);
  const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const T delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson with Richardson correction, absolute tolerance. Works for
/// real or complex integrands. Splits the range into `panels` first so that
/// oscillatory integrands are not fooled by a lucky initial sample.
template <class F>
auto adaptive_simpson(const F &f, double a, double b, double abs_tol, int panels = 8, int max_depth = 40)
{
  using T = decltype(f(a));
  if (panels < 1)
    throw std::invalid_argument("adaptive_simpson: panels must be >= 1");
  const double width = (b - a) / panels;
  T total{};
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * width;
    const double hi = i + 1 == panels ? b : lo + width;
    const T flo = f(lo);
    const T fmid = f(0.5 * (lo + hi));
    const T fhi = f(hi);
    const T whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    total += detail::simpson_step(f, lo, hi, flo, fmid, fhi, whole, abs_tol / panels, max_depth);
  }
  return total;
}

} // namespace dickman
