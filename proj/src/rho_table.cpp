#include "dickman/rho_table.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dickman {

namespace {

// From this integer on, rho is built from the averaged form, which keeps
// relative accuracy where the subtractive update cancels.
constexpr std::size_t kWindowFrom = 5;

// Running integral int_0^{j h} f over one smooth piece, given f at the nodes
// 0..N of that piece. Simpson on even prefixes, Simpson plus the 3/8 rule on
// odd ones, and a cubic-fit weight for the first cell.
void cumulative_piece(std::span<const double> f, double h, std::span<double> out)
{
  const std::size_t n = f.size() - 1;
  out[0] = 0.0;
  out[1] = h * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]) / 24.0;
  for (std::size_t j = 2; j <= n; ++j) {
    if (j % 2 == 0)
      out[j] = out[j - 2] + h / 3.0 * (f[j - 2] + 4.0 * f[j - 1] + f[j]);
    else
      out[j] = out[j - 3] + 3.0 * h / 8.0 * (f[j - 3] + 3.0 * f[j - 2] + 3.0 * f[j - 1] + f[j]);
  }
}

} // namespace

RhoTable RhoTable::build(double x_max, double step)
{
  if (!std::isfinite(step) || step <= 0.0)
    throw std::invalid_argument("rho table: step must be finite and positive");
  if (step > 1e-2)
    throw std::invalid_argument("rho table: step must not exceed 1e-2");
  if (!std::isfinite(x_max) || x_max < 2.0)
    throw std::invalid_argument("rho table: x_max must be at least 2");

  const double inv = 1.0 / step;
  const auto per_unit = static_cast<std::size_t>(std::llround(inv));
  if (std::abs(static_cast<double>(per_unit) * step - 1.0) > 1e-9)
    throw std::invalid_argument("rho table: step must be 1/N for an integer N");

  const auto pieces = static_cast<std::size_t>(std::ceil(x_max - 1e-12));

  RhoTable t;
  t.per_unit_ = per_unit;
  t.step_ = 1.0 / static_cast<double>(per_unit);
  t.x_max_ = static_cast<double>(pieces);

  const std::size_t total = pieces * per_unit + 1;
  const double h = t.step_;
  const auto node_x = [per_unit](std::size_t i) {
    return static_cast<double>(i) / static_cast<double>(per_unit);
  };

  t.rho_.assign(total, 1.0);
  for (std::size_t j = 1; j <= per_unit; ++j)
    t.rho_[per_unit + j] = 1.0 - std::log(node_x(per_unit + j));

  std::vector<double> g(per_unit + 1);
  std::vector<double> acc(per_unit + 1);
  for (std::size_t k = 2; k < std::min<std::size_t>(pieces, kWindowFrom); ++k) {
    const std::size_t begin = k * per_unit;
    for (std::size_t j = 0; j <= per_unit; ++j)
      g[j] = t.rho_[begin - per_unit + j] / node_x(begin + j);
    cumulative_piece(g, h, acc);
    for (std::size_t j = 1; j <= per_unit; ++j)
      t.rho_[begin + j] = t.rho_[begin] - acc[j];
  }

  // x rho(x) = int_{x-1}^x rho, Simpson over the whole window (3/8 rule on
  // the last three cells when N is odd), solved for the endpoint value.
  std::vector<double> w(per_unit + 1, 0.0);
  const std::size_t simpson_end = per_unit % 2 == 0 ? per_unit : per_unit - 3;
  for (std::size_t i = 0; i < simpson_end; i += 2) {
    w[i] += 1.0 / 3.0;
    w[i + 1] += 4.0 / 3.0;
    w[i + 2] += 1.0 / 3.0;
  }
  if (simpson_end != per_unit) {
    w[simpson_end] += 3.0 / 8.0;
    w[simpson_end + 1] += 9.0 / 8.0;
    w[simpson_end + 2] += 9.0 / 8.0;
    w[simpson_end + 3] += 3.0 / 8.0;
  }
  for (std::size_t i = kWindowFrom * per_unit + 1; i < total; ++i) {
    const double *window = t.rho_.data() + (i - per_unit);
    double known = 0.0;
    for (std::size_t q = 0; q < per_unit; ++q)
      known += w[q] * window[q];
    t.rho_[i] = h * known / (node_x(i) - h * w[per_unit]);
  }

  t.cum_rho_.assign(total, 0.0);
  t.cum_rho_sq_.assign(total, 0.0);
  std::vector<double> g2(per_unit + 1);
  std::vector<double> acc2(per_unit + 1);
  for (std::size_t k = 0; k < pieces; ++k) {
    const std::size_t begin = k * per_unit;
    for (std::size_t j = 0; j <= per_unit; ++j) {
      g[j] = t.rho_[begin + j];
      g2[j] = g[j] * g[j];
    }
    cumulative_piece(g, h, acc);
    cumulative_piece(g2, h, acc2);
    for (std::size_t j = 1; j <= per_unit; ++j) {
      t.cum_rho_[begin + j] = t.cum_rho_[begin] + acc[j];
      t.cum_rho_sq_[begin + j] = t.cum_rho_sq_[begin] + acc2[j];
    }
  }
  return t;
}

void RhoTable::check_range(double x, const char *what) const
{
  if (!(x >= 0.0 && x <= x_max_))
    throw std::out_of_range(std::string("rho table: ") + what + " argument " + std::to_string(x) +
                            " outside [0, " + std::to_string(x_max_) + "]");
}

RhoTable::Locator RhoTable::locate(double x) const
{
  const auto pieces = static_cast<std::size_t>(x_max_);
  auto piece = static_cast<std::size_t>(std::floor(x));
  if (piece >= pieces)
    piece = pieces - 1;
  const double s = (x - static_cast<double>(piece)) * static_cast<double>(per_unit_);
  auto j = static_cast<std::size_t>(std::max(0.0, std::floor(s)));
  if (j >= per_unit_)
    j = per_unit_ - 1;
  return {piece * per_unit_, piece * per_unit_ + j};
}

// Cubic Lagrange through four nodes of the same piece.
double RhoTable::interpolate(const Locator &loc, double x) const
{
  const std::size_t j = loc.node - loc.piece_begin;
  const std::size_t j0 = std::min(j > 0 ? j - 1 : 0, per_unit_ - 3);
  const std::size_t base = loc.piece_begin + j0;
  const double s = x * static_cast<double>(per_unit_) - static_cast<double>(base);
  const double *y = rho_.data() + base;
  const double l0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
  const double l1 = s * (s - 2.0) * (s - 3.0) / 2.0;
  const double l2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
  const double l3 = s * (s - 1.0) * (s - 2.0) / 6.0;
  return l0 * y[0] + l1 * y[1] + l2 * y[2] + l3 * y[3];
}

double RhoTable::rho(double x) const
{
  check_range(x, "rho");
  if (x <= 1.0)
    return 1.0;
  return interpolate(locate(x), x);
}

double RhoTable::density(double x) const
{
  check_range(x, "density");
  return std::exp(-kEulerGamma) * rho(x);
}

double RhoTable::rho_integral(double upto) const
{
  check_range(upto, "rho_integral");
  const Locator loc = locate(upto);
  const double left = static_cast<double>(loc.node) / static_cast<double>(per_unit_);
  if (upto <= left)
    return cum_rho_[loc.node];
  using boost::math::quadrature::gauss;
  const auto f = [&](double t) { return interpolate(loc, t); };
  return cum_rho_[loc.node] + gauss<double, 4>::integrate(f, left, upto);
}

double RhoTable::rho_sq_integral(double upto) const
{
  check_range(upto, "rho_sq_integral");
  const Locator loc = locate(upto);
  const double left = static_cast<double>(loc.node) / static_cast<double>(per_unit_);
  if (upto <= left)
    return cum_rho_sq_[loc.node];
  using boost::math::quadrature::gauss;
  const auto f = [&](double t) {
    const double r = interpolate(loc, t);
    return r * r;
  };
  return cum_rho_sq_[loc.node] + gauss<double, 4>::integrate(f, left, upto);
}

double RhoTable::cdf(double x) const
{
  check_range(x, "cdf");
  return std::exp(-kEulerGamma) * rho_integral(x);
}

} // namespace dickman
