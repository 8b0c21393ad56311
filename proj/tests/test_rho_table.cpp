#include "dickman/rho_table.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace dickman;
using boost::multiprecision::cpp_bin_float_50;

namespace {

const RhoTable &table30()
{
  static const RhoTable t = RhoTable::build(30.0);
  return t;
}

// rho(3) = 1 - ln 2 - int_2^3 (1 - ln(t - 1))/t dt, to 50 digits.
double rho3_oracle()
{
  using boost::math::quadrature::gauss_kronrod;
  const auto f = [](cpp_bin_float_50 t) { return (1 - log(t - 1)) / t; };
  const cpp_bin_float_50 tail = gauss_kronrod<cpp_bin_float_50, 61>::integrate(f, cpp_bin_float_50(2), cpp_bin_float_50(3), 15,
                                                                                 cpp_bin_float_50("1e-40"));
  return static_cast<double>(1 - log(cpp_bin_float_50(2)) - tail);
}

} // namespace

TEST_CASE("rho on the first two pieces")
{
  const RhoTable t = RhoTable::build(3.0);
  CHECK(t.rho(0.0) == 1.0);
  CHECK(t.rho(0.25) == 1.0);
  CHECK(t.rho(0.5) == 1.0);
  CHECK(t.rho(1.0) == 1.0);
  CHECK(std::abs(t.rho(1.5) - (1.0 - std::log(1.5))) < 1e-10);
  CHECK(std::abs(t.rho(2.0) - (1.0 - std::log(2.0))) < 1e-10);
  for (int i = 0; i <= 1000; ++i) {
    const double x = 1.0 + i / 1000.0;
    REQUIRE(std::abs(t.rho(x) - (1.0 - std::log(x))) < 1e-10);
  }
}

TEST_CASE("rho(3) against a 50-digit quadrature")
{
  const RhoTable t = RhoTable::build(3.0);
  CHECK(std::abs(t.rho(3.0) - rho3_oracle()) < 1e-8);
}

TEST_CASE("density and distribution function")
{
  const RhoTable &t = table30();
  const double emg = std::exp(-kEulerGamma);
  CHECK(std::abs(t.density(0.0) - 0.5614594836) < 1e-10);
  CHECK(t.cdf(0.0) == 0.0);
  CHECK(std::abs(t.cdf(1.0) - emg) < 1e-12);
  CHECK(std::abs(t.rho_integral(1.0) - 1.0) < 1e-12);
  CHECK(std::abs(t.rho_sq_integral(1.0) - 1.0) < 1e-12);
  CHECK(std::abs(t.rho_integral(30.0) - std::exp(kEulerGamma)) < 1e-6);
  CHECK(std::abs(t.cdf(30.0) - 1.0) < 1e-6);
}

TEST_CASE("integral identity D(x) - D(x-1) = x e^-gamma rho(x)")
{
  const RhoTable &t = table30();
  for (double x : {1.0, 1.5, 2.0, 3.0, 5.0, 8.0}) {
    const double lower = x >= 1.0 ? t.cdf(x - 1.0) : 0.0;
    CHECK(std::abs(t.cdf(x) - lower - x * t.density(x)) < 1e-8);
  }
}

TEST_CASE("rho is positive and non-increasing")
{
  const auto v = table30().values();
  for (std::size_t i = 1; i < v.size(); ++i) {
    REQUIRE(v[i] > 0.0);
    REQUIRE(v[i] <= v[i - 1]);
  }
}

TEST_CASE("rho at integer points")
{
  // Classical values of rho at 4 and 5.
  const RhoTable &t = table30();
  CHECK(std::abs(t.rho(4.0) - 0.00491092564776083) < 1e-9);
  CHECK(std::abs(t.rho(5.0) - 0.000354724700444) < 1e-11);
}

TEST_CASE("invalid tables and arguments")
{
  CHECK_THROWS_AS(RhoTable::build(1.5), std::invalid_argument);
  CHECK_THROWS_AS(RhoTable::build(3.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(RhoTable::build(3.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(RhoTable::build(3.0, 0.003), std::invalid_argument);
  const RhoTable t = RhoTable::build(3.0);
  CHECK_THROWS_AS(t.rho(3.5), std::out_of_range);
  CHECK_THROWS_AS(t.rho(-0.1), std::out_of_range);
}
