#pragma once

#include "dickman/kappa.hpp"
#include "dickman/rho_table.hpp"
#include "dickman/spectral.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dickman {

/// One cell of a numerical audit: an exact left-hand side set against a
/// bound or a limit.
struct AuditRow {
  int m = 0;
  int n = 0;
  double x = 0.0;
  std::int64_t kappa_m = 0;
  std::int64_t kappa_n = 0;
  double lhs = 0.0;
  double envelope = 0.0;
  double ratio = 0.0;  // lhs / envelope, 0 when the envelope is 0
  double error = 0.0;  // |lhs - envelope|, for limit audits
  std::string label;
};

/// n P(T_n = kappa_n) against e^{-gamma} rho(x).
std::vector<AuditRow> llt_table(const KappaSeq &kappa, std::span<const int> n_list, const RhoTable &table);

/// |d P(T_m^n = d) - P(d - n < T_m^n <= d - (m+1))| with d = kappa_n - kappa_m,
/// against (1 + log(n/m))/sqrt(n - m).
AuditRow stimabase_check(int m, int n, const KappaSeq &kappa);

/// Kolmogorov distance of T_m^n/(n-m) from D against g_{m,n}. The table must
/// reach (n + m + 1)/2.
AuditRow w2_check(int m, int n, const Envelope &env, const RhoTable &table);

/// |phi_{T_m^n/(n-m)}(t) - phi(t)| against f_{m,n}(t) at the t with the
/// largest ratio (t = 0 is skipped); that t goes into `label`.
AuditRow w1_check(const Envelope &env, std::span<const double> ts);

/// Smallest C with |phi_{T_m^n/(n-m)}(t) - phi(t)| <= f_{m,n}(t) at every t.
double w1_required_constant(int m, int n, std::span<const double> ts);

/// sup_u |gamma_{m,n}(u)| over `points` equispaced u in [-pi, pi] against
/// (1 + log(n/m))/(n - m).
AuditRow gamma_sup_check(int m, int n, int points = 10000);

/// 2 pi n sum_v P(T_n = v)^2 against 2 pi e^{-2 gamma} int rho^2.
AuditRow zs_check(int n, const RhoTable &table);

/// (1 + x(1 - eps))/(x(1 + eps)).
double sigma_eps(double x, double eps);

/// True iff P(T_m^n = kappa_n - kappa_m) is exactly zero. Throws
/// std::invalid_argument unless 0 < eps < 1/(2x), x j (1 - eps) < kappa_j <
/// x j (1 + eps) for j in {m, n}, and m < n < sigma m.
bool lemmino_check(const KappaSeq &kappa, double eps, int m, int n);

/// |Cov(Y_m, Y_n)| per pair, labelled by regime:
///   "diagonal" (m = n)             against m,
///   "near"     (m < n <= sigma m)  against 1,
///   "far"      (otherwise)         against
///       n/(n-m) chi_{m,n} + m/(n-m) + chi_{2,n} + 1/n,
/// with chi built from the inner constant c_const.
std::vector<AuditRow> covariance_audit(const KappaSeq &kappa, std::span<const std::pair<int, int>> pairs,
                                       double c_const, double eps);

/// Fixed audit grids. Bump kGridVersion when any of them changes; the version
/// is folded into the golden-file grid hash.
namespace grids {

inline constexpr const char *kGridVersion = "grids-v1";

std::vector<double> slopes();                          // {0.5, 1, 1.5, 2, 3}
std::vector<std::pair<int, int>> stimabase_pairs();   // m in {2,5,10,20}, n = 4m, 8m, ... and 1000
std::vector<std::pair<int, int>> w1_pairs();
std::vector<double> w1_ts();                          // [-5, 5] step 1/4, without 0
std::vector<std::pair<int, int>> w2_pairs();          // n <= 400
std::vector<std::pair<int, int>> gamma_pairs();
std::vector<std::pair<int, int>> covariance_pairs(double x, double eps);
double covariance_eps(double x);

} // namespace grids

} // namespace dickman
