#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dickman {

// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Tabulated Dickman function on a uniform grid over [0, x_max].
///
/// rho is 1 on [0,1] and 1 - ln x on [1,2]. On (2, 5] each unit interval
/// (k, k+1] is filled from rho(x) = rho(k) - int_k^x rho(t-1)/t dt, where the
/// integrand is read off the already built interval (k-1, k]. Past 5 the
/// subtraction loses relative accuracy, so nodes come from
/// x rho(x) = int_{x-1}^x rho(t) dt, which has only positive terms. Cumulative
/// integrals of rho and rho^2 are stored alongside, so the Dickman
/// distribution D(x) = e^{-gamma} int_0^x rho is a table lookup plus a local
/// Gauss correction.
///
/// All interpolation stays inside one unit interval: rho is smooth on each
/// (k, k+1) but its derivatives jump at the integers.
///
/// Beyond x ~ 140 rho underflows double precision and the stored values reach 0.
class RhoTable {
public:
  /// step must be of the form 1/N with N >= 100. The endpoint is rounded up
  /// to the next integer. Throws std::invalid_argument on bad input.
  static RhoTable build(double x_max, double step = 1e-3);

  double x_max() const { return x_max_; }
  double step() const { return step_; }
  double gamma_const() const { return kEulerGamma; }
  std::size_t nodes_per_unit() const { return per_unit_; }
  std::span<const double> values() const { return rho_; }

  // All evaluators throw std::out_of_range outside [0, x_max].
  double rho(double x) const;
  double density(double x) const;
  double cdf(double x) const;
  double rho_integral(double upto) const;
  double rho_sq_integral(double upto) const;

private:
  RhoTable() = default;

  struct Locator {
    std::size_t piece_begin;  // node index of the left integer of the piece
    std::size_t node;         // node at or left of x, inside the piece
  };
  Locator locate(double x) const;
  double interpolate(const Locator &loc, double x) const;
  void check_range(double x, const char *what) const;

  double x_max_ = 0.0;
  double step_ = 0.0;
  std::size_t per_unit_ = 0;
  std::vector<double> rho_;
  std::vector<double> cum_rho_;
  std::vector<double> cum_rho_sq_;
};

} // namespace dickman
