#include "dickman/cumulants.hpp"

#include <doctest.h>

#include <sstream>
#include <stdexcept>

using namespace dickman;

namespace {

BigInt factorial(int n)
{
  BigInt f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

CumulantPoly poly(int n, std::vector<int> c)
{
  CumulantPoly p{n, {}};
  for (int v : c)
    p.coeffs.emplace_back(v);
  return p;
}

} // namespace

TEST_CASE("alternating binomial sums")
{
  for (int n = 1; n <= 20; ++n)
    CHECK(a_coeff(1, n) == 1);
  CHECK(a_coeff(2, 2) == -2);
  for (int n = 1; n <= 20; ++n)
    CHECK(a_coeff(n, n) == (n % 2 ? 1 : -1) * factorial(n));
  CHECK_THROWS_AS(a_coeff(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(a_coeff(-1, 2), std::invalid_argument);
}

TEST_CASE("Stirling numbers of the second kind")
{
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(10, 3) == 9330);
  for (int n = 0; n <= 20; ++n)
    CHECK(stirling2(n, n) == 1);
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k <= n; ++k)
      REQUIRE(a_coeff(k, n) == (k % 2 ? 1 : -1) * factorial(k) * stirling2(n, k));
}

TEST_CASE("low-order cumulant polynomials")
{
  CHECK(cumulant_recurrence(1) == poly(1, {0, 1}));
  CHECK(cumulant_explicit(2) == poly(2, {0, 1, -1}));
  CHECK(cumulant_explicit(3) == poly(3, {0, 1, -3, 2}));
  // x(1 - x)(1 - 6x + 6x^2)
  CHECK(cumulant_explicit(4) == poly(4, {0, 1, -7, 12, -6}));
  CHECK(cumulant_recurrence(2) == cumulant_explicit(2));
}

TEST_CASE("explicit form equals the recurrence")
{
  for (int n = 2; n <= 30; ++n) {
    const CumulantPoly e = cumulant_explicit(n);
    REQUIRE(e == cumulant_recurrence(n));
    CHECK(e.degree() == n);
    CHECK(e.evaluate(0) == 0);
    CHECK(e.evaluate(1) == 0);
  }
}

TEST_CASE("second cumulant is the Bernoulli variance")
{
  for (Rational p : {Rational(1, 2), Rational(1, 3), Rational(1, 10)}) {
    const Rational mean = p;                // E Z = E Z^2 = p
    const Rational var = p - mean * mean;
    CHECK(cumulant_explicit(2).evaluate(p) == var);
  }
}

TEST_CASE("ratio series")
{
  const auto s2 = cumulant_ratio_series(2);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0] == -1);
  for (int n = 2; n <= 30; ++n) {
    const auto series = cumulant_ratio_series(n);
    const CumulantPoly c = cumulant_explicit(n);
    // c_n(x)/x - 1 has coefficients c[i+1] at x^i, minus 1 at x^0.
    REQUIRE(c.coeffs[1] == 1);
    REQUIRE(series.size() + 1 == c.coeffs.size() - 1);
    for (std::size_t i = 0; i < series.size(); ++i)
      REQUIRE(series[i] == Rational(c.coeffs[i + 2]));
  }
  CHECK_THROWS_AS(cumulant_ratio_series(1), std::invalid_argument);
}

TEST_CASE("alpha coefficients")
{
  for (auto [m, n] : {std::pair{2, 4}, {2, 6}, {5, 30}})
    CHECK(alpha_j_exact(m, n, 1) == 0);
  CHECK(alpha_j_exact(2, 4, 2) == -1);
  CHECK(alpha_j(2, 4, 2) == -1.0);
  // Third cumulant: sum_k k^2 (k c_3(1/k) - 1)/(n - m) with c_3(p) = p(1-p)(1-2p).
  Rational want = 0;
  for (int k = 3; k <= 7; ++k) {
    const Rational p(1, k);
    want += Rational(k * k) * (k * p * (1 - p) * (1 - 2 * p) - 1);
  }
  want /= 5;
  CHECK(alpha_j_exact(2, 7, 3) == want);
  CHECK_THROWS_AS(alpha_j(2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(alpha_j(2, 5, 0), std::invalid_argument);
}

TEST_CASE("CSV tables")
{
  std::ostringstream a;
  write_a_table_csv(2, a);
  CHECK(a.str() == "n,k,a_kn,stirling2\n1,1,1,1\n2,1,1,1\n2,2,-2,1\n");
  std::ostringstream p;
  write_poly_table_csv(2, p);
  CHECK(p.str().rfind("n,power,coefficient\n", 0) == 0);
}
