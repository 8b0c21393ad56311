#pragma once

#include "dickman/kappa.hpp"
#include "dickman/rho_table.hpp"

#include <complex>

namespace dickman {

using Complex = std::complex<double>;

/// E[e^{itZ_k}] = 1 + (e^{it} - 1)/k.
Complex phi_Z(int k, double t);

/// E[e^{itT_m^n}] = prod_{k=m+1}^n phi_Z(k, tk).
Complex phi_T(int m, int n, double t);

/// Dickman characteristic function exp{int_0^1 (e^{itu} - 1)/u du}, by
/// adaptive Simpson at absolute tolerance 1e-12.
Complex phi_dickman(double t);

/// Error kernel
///   gamma_{m,n}(u) = (n-m)^{-1} sum_{k=m+1}^n e^{iuk}(1 - e^{iuk})/(k - 1 + e^{iuk}),
/// for 2 <= m < n and |u| <= pi.
Complex gamma_mn(int m, int n, double u);

/// J-term partial sum of sum_j (it)^{j-1}/(j-1)! alpha_j^{(m,n)}. Throws
/// std::domain_error if a partial sum stops being finite.
Complex gamma_series(int m, int n, double t, int J);

/// Indices and calibration constant shared by the bound envelopes.
struct Envelope {
  int m;
  int n;
  double c_const;

  /// Validates m >= 2, n > m and a finite positive constant.
  static Envelope make(int m, int n, double c_const = 1.0);
};

struct EnvelopeValue {
  double value;
  /// The bound exceeds 1, so it says nothing about a CDF distance.
  bool vacuous;
};

/// exp{C t^2 (log(n/m)/(n-m)^2 + (m+2)/(n-m))} - 1.
double f_envelope(const Envelope &env, double t);

/// exp(C {log(n/m)/(n-m)^2 + (m+2)/(n-m)} log^2(n/m)) - 1 + 1/log(n/m).
EnvelopeValue g_envelope(const Envelope &env);

/// chi_{m,n} for the sequence kappa and slope x:
///   r log(n/m)/sqrt(n-m) + r g_{m,n} + x|r - 1/x| + (m+1)/(kappa_n - kappa_m),
/// with r = (n-m)/(kappa_n - kappa_m). Throws if kappa_n <= kappa_m.
double chi(const Envelope &env, const KappaSeq &kappa, double x);

/// int_{-pi n}^{pi n} |phi_{T_n/n}(u)|^2 du, evaluated exactly as
/// 2 pi n sum_v P(T_n = v)^2.
double l2_cf_integral(int n);

/// Same integral by adaptive quadrature of the product formula. Only meant
/// for small n.
double l2_cf_integral_direct(int n, double abs_tol = 1e-9);

/// Limit int |phi|^2 = 2 pi e^{-2 gamma} int_0^inf rho^2, truncated at the
/// table end.
double l2_cf_limit(const RhoTable &table);

} // namespace dickman
