#include "dickman/kappa.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace dickman;

TEST_CASE("parsing keeps the decimal slope exact")
{
  const KappaSeq a = KappaSeq::from_decimal("1.5");
  CHECK(a.num() == 3);
  CHECK(a.den() == 2);
  const KappaSeq b = KappaSeq::from_decimal("3/2");
  CHECK(b.num() == 3);
  CHECK(b.den() == 2);
  const KappaSeq c = KappaSeq::from_double(0.1);
  CHECK(c.num() == 1);
  CHECK(c.den() == 10);
  CHECK(KappaSeq::from_decimal("2").den() == 1);
}

TEST_CASE("floor, round and exact multiple")
{
  const KappaSeq f = KappaSeq::from_decimal("1.5", KappaMode::floor);
  const KappaSeq r = KappaSeq::from_decimal("1.5", KappaMode::round);
  CHECK(f(1) == 1);
  CHECK(r(1) == 2);
  CHECK(f(3) == 4);
  CHECK(r(3) == 5);
  const KappaSeq e = KappaSeq::from_rational(2, 1, KappaMode::exact_multiple);
  CHECK(e(7) == 14);
  CHECK_THROWS_AS(KappaSeq::from_decimal("1.5", KappaMode::exact_multiple), std::invalid_argument);
}

TEST_CASE("kappa_n / n stays within 1/n of x")
{
  for (const char *slope : {"0.5", "1", "1.5", "2", "3", "0.3", "2.75"})
    for (KappaMode mode : {KappaMode::floor, KappaMode::round}) {
      const KappaSeq k = KappaSeq::from_decimal(slope, mode);
      for (std::int64_t n = 1; n <= 5000; ++n)
        REQUIRE(std::abs(static_cast<double>(k(n)) / n - k.x()) <= 1.0 / n + 1e-15);
    }
}

TEST_CASE("no drift at large n")
{
  const KappaSeq k = KappaSeq::from_decimal("0.1");
  CHECK(k(1'000'000'000'000LL) == 100'000'000'000LL);
  CHECK(k(10) == 1);
}

TEST_CASE("cursor agrees with direct evaluation")
{
  for (const char *slope : {"0.5", "1", "1.5", "2", "3", "7/3"})
    for (KappaMode mode : {KappaMode::floor, KappaMode::round}) {
      const KappaSeq k = KappaSeq::from_decimal(slope, mode);
      KappaCursor c(k);
      for (std::int64_t n = 1; n <= 20000; ++n)
        REQUIRE(c.next() == k(n));
      CHECK(c.index() == 20000);
    }
}

TEST_CASE("monotonicity flag")
{
  CHECK(KappaSeq::from_decimal("1").strictly_increasing());
  CHECK_FALSE(KappaSeq::from_decimal("0.5").strictly_increasing());
}

TEST_CASE("invalid slopes and modes")
{
  CHECK_THROWS_AS(KappaSeq::from_double(0.0), std::invalid_argument);
  CHECK_THROWS_AS(KappaSeq::from_double(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(KappaSeq::from_double(NAN), std::invalid_argument);
  CHECK_THROWS_AS(KappaSeq::from_decimal("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_kappa_mode("ceil"), std::invalid_argument);
  CHECK(parse_kappa_mode("exact-multiple") == KappaMode::exact_multiple);
}
