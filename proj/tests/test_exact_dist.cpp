#include "dickman/exact_dist.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

using namespace dickman;

namespace {

// Law of sum_{k=m+1}^n k Z_k by walking all 2^(n-m) outcomes.
std::map<std::int64_t, Rational> enumerate(int m, int n)
{
  std::map<std::int64_t, Rational> law;
  const int count = n - m;
  for (std::uint64_t mask = 0; mask < (1ULL << count); ++mask) {
    Rational p = 1;
    std::int64_t v = 0;
    for (int i = 0; i < count; ++i) {
      const int k = m + 1 + i;
      if (mask >> i & 1) {
        p *= Rational(1, k);
        v += k;
      } else {
        p *= Rational(k - 1, k);
      }
    }
    if (p != 0)
      law[v] += p;
  }
  return law;
}

} // namespace

TEST_CASE("small laws")
{
  const Pmf p2 = pmf(0, 2, PmfMode::exact_rational);
  CHECK(p2.exact_at(1) == Rational(1, 2));
  CHECK(p2.exact_at(3) == Rational(1, 2));
  CHECK(p2.exact_at(2) == 0);

  const Pmf p3 = pmf(0, 3, PmfMode::exact_rational);
  CHECK(p3.exact_at(1) == Rational(1, 3));
  CHECK(p3.exact_at(3) == Rational(1, 3));
  CHECK(p3.exact_at(4) == Rational(1, 6));
  CHECK(p3.exact_at(6) == Rational(1, 6));

  const Pmf p24 = pmf(2, 4, PmfMode::exact_rational);
  CHECK(p24.exact_at(0) == Rational(1, 2));
  CHECK(p24.exact_at(3) == Rational(1, 4));
  CHECK(p24.exact_at(4) == Rational(1, 6));
  CHECK(p24.exact_at(7) == Rational(1, 12));
  CHECK(prob_at(p24, 7) == doctest::Approx(1.0 / 12).epsilon(1e-15));
}

TEST_CASE("dynamic programme equals full enumeration")
{
  for (int n = 1; n <= 12; ++n) {
    const auto law = enumerate(0, n);
    const Pmf exact = pmf(0, n, PmfMode::exact_rational);
    const Pmf fl = pmf(0, n);
    Rational total = 0;
    for (std::int64_t v = 0; v <= exact.max_value(); ++v) {
      const auto it = law.find(v);
      const Rational want = it == law.end() ? Rational(0) : it->second;
      REQUIRE(exact.exact_at(v) == want);
      REQUIRE(std::abs(fl.probs()[v] - static_cast<double>(want)) < 1e-12);
      total += want;
    }
    CHECK(total == 1);
  }
  const auto law = enumerate(4, 11);
  const Pmf p = pmf(4, 11, PmfMode::exact_rational);
  for (const auto &[v, q] : law)
    CHECK(p.exact_at(v) == q);
}

TEST_CASE("convolution consistency")
{
  for (auto [m, n] : {std::pair{3, 7}, {5, 12}, {10, 20}}) {
    const Pmf whole = pmf(0, n);
    const Pmf lo = pmf(0, m);
    const Pmf hi = pmf(m, n);
    const auto conv = convolve(lo.probs(), hi.probs());
    REQUIRE(conv.size() >= whole.probs().size());
    for (std::size_t v = 0; v < conv.size(); ++v) {
      const double w = v < whole.probs().size() ? whole.probs()[v] : 0.0;
      REQUIRE(std::abs(conv[v] - w) < 1e-12);
    }
  }
}

TEST_CASE("point probabilities from the truncated programme")
{
  const Pmf p = pmf(0, 40);
  for (std::int64_t v : {0, 1, 17, 40, 100, 400, 820})
    CHECK(point_probability(0, 40, v) == doctest::Approx(prob_at(p, v)).epsilon(1e-12));
  CHECK(point_probability(0, 3, 5) == 0.0);
  CHECK(point_probability(0, 3, 100) == 0.0);
  const auto prefix = pmf_prefix(5, 30, 50);
  const Pmf q = pmf(5, 30);
  for (std::int64_t v = 0; v <= 50; ++v)
    CHECK(prefix[v] == doctest::Approx(q.probs()[v]).epsilon(1e-12));

  const auto hits = hit_probabilities(KappaSeq::from_rational(3, 2), 60);
  for (int n = 1; n <= 60; ++n)
    REQUIRE(hits[n] == doctest::Approx(point_probability(0, n, 3 * n / 2)).epsilon(1e-12));
}

TEST_CASE("scaled distribution function")
{
  const Pmf p2 = pmf(0, 2);
  CHECK(scaled_cdf(p2, 10.0) == 1.0);
  CHECK(scaled_cdf(p2, 0.4) == 0.0);
  CHECK(scaled_cdf(pmf(0, 3), 1.0) == doctest::Approx(2.0 / 3));
}

TEST_CASE("power sums")
{
  CHECK(power_sum(pmf(0, 1)) == 1.0);
  CHECK(power_sum(pmf(0, 2)) == 0.5);
  CHECK(power_sum(pmf(0, 3)) == doctest::Approx(5.0 / 18).epsilon(1e-15));
}

TEST_CASE("Kolmogorov distance")
{
  const RhoTable t = RhoTable::build(15.0);
  const double d = kolmogorov_distance(pmf(0, 2), t);
  CHECK(d > 0.0);
  CHECK(d < 1.0);
  // Independent sweep: both one-sided limits at every atom.
  const Pmf p = pmf(3, 20);
  double sweep = 0.0;
  double below = 0.0;
  for (std::int64_t v = 0; v <= p.max_value(); ++v) {
    if (p.probs()[v] == 0.0)
      continue;
    const double at = t.cdf(static_cast<double>(v) / 17.0);
    sweep = std::max(sweep, std::abs(below - at));
    below += p.probs()[v];
    sweep = std::max(sweep, std::abs(below - at));
  }
  CHECK(kolmogorov_distance(p, t) == doctest::Approx(sweep).epsilon(1e-12));
}

TEST_CASE("covariance of scaled hit indicators")
{
  const KappaSeq one = KappaSeq::from_rational(1, 1, KappaMode::exact_multiple);
  CHECK(cov_Y(one, 2, 2) == 0.0);
  CHECK(cov_Y(one, 3, 3) == doctest::Approx(2.0).epsilon(1e-14));
  // Cov(mY, nY') with exact joint law by enumeration at (m, n) = (3, 6).
  const auto low = enumerate(0, 3);
  const auto high = enumerate(3, 6);
  const Rational pm = low.count(3) ? low.at(3) : Rational(0);
  const Rational pmn = high.count(3) ? high.at(3) : Rational(0);
  const Rational pn = static_cast<Rational>(pmf(0, 6, PmfMode::exact_rational).exact_at(6));
  const Rational cov = Rational(18) * (pm * pmn - pm * pn);
  CHECK(cov_Y(one, 3, 6) == doctest::Approx(static_cast<double>(cov)).epsilon(1e-14));
}

TEST_CASE("CSV export")
{
  std::ostringstream out;
  write_csv(pmf(0, 3), out);
  CHECK(out.str() ==
        "value,probability\n1,0.33333333333333331\n3,0.33333333333333331\n4,0.16666666666666666\n"
        "6,0.16666666666666666\n");
}

TEST_CASE("invalid arguments")
{
  CHECK_THROWS_AS(pmf(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(pmf(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(pmf(0, 65, PmfMode::exact_rational), std::invalid_argument);
  CHECK_THROWS_AS(pmf(0, 3).exact_at(1), std::logic_error);
  CHECK_THROWS_AS(kolmogorov_distance(pmf(0, 100), RhoTable::build(10.0)), std::out_of_range);
}
