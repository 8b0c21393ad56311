#include "dickman/audits.hpp"
#include "dickman/exact_dist.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <algorithm>
#include <stdexcept>

using namespace dickman;

TEST_CASE("local limit table")
{
  const RhoTable t = RhoTable::build(10.0);
  const KappaSeq one = KappaSeq::from_decimal("1");
  const int ns[] = {1, 3};
  const auto rows = llt_table(one, ns, t);
  CHECK(rows[0].lhs == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rows[1].lhs == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rows[0].envelope == doctest::Approx(std::exp(-kEulerGamma)).epsilon(1e-12));

  const int big[] = {125, 250, 500, 1000, 2000};
  const auto llt = llt_table(one, big, t);
  for (std::size_t i = 1; i < llt.size(); ++i)
    CHECK(llt[i].error < llt[i - 1].error);
  CHECK(llt.back().error < 0.05);

  const auto two = llt_table(KappaSeq::from_decimal("2"), big, t);
  CHECK(two.back().error < two.front().error);
  CHECK_THROWS_AS(llt_table(KappaSeq::from_decimal("12"), big, t), std::out_of_range);
}

TEST_CASE("stimabase lhs from an independent window sum")
{
  const KappaSeq one = KappaSeq::from_decimal("1");
  const AuditRow r = stimabase_check(2, 50, one);
  const Pmf p = pmf(2, 50);
  const std::int64_t d = 48;
  double window = 0.0;
  for (std::int64_t v = 0; v <= p.max_value(); ++v)
    if (v > d - 50 && v <= d - 3)
      window += p.probs()[v];
  CHECK(r.lhs == doctest::Approx(std::abs(d * p.probs()[d] - window)).epsilon(1e-12));
  CHECK(r.envelope == doctest::Approx((1 + std::log(25.0)) / std::sqrt(48.0)));
  CHECK(std::isfinite(r.ratio));
  CHECK_THROWS_AS(stimabase_check(1, 50, one), std::invalid_argument);
  CHECK_THROWS_AS(stimabase_check(4, 5, KappaSeq::from_decimal("0.5")), std::invalid_argument);
}

TEST_CASE("Kolmogorov and L2 audits")
{
  const RhoTable t = RhoTable::build(60.0);
  for (auto [m, n] : {std::pair{2, 20}, {5, 40}, {10, 100}}) {
    const AuditRow r = w2_check(m, n, Envelope::make(m, n), t);
    CHECK(r.lhs >= 0.0);
    CHECK(r.lhs <= 1.0);
  }
  CHECK(zs_check(2, t).lhs == doctest::Approx(2 * std::numbers::pi));
}

TEST_CASE("characteristic function audits")
{
  const auto ts = grids::w1_ts();
  CHECK(std::find(ts.begin(), ts.end(), 0.0) == ts.end());
  const AuditRow r = w1_check(Envelope::make(5, 20), ts);
  CHECK(r.ratio > 0.0);
  const double c = w1_required_constant(5, 20, ts);
  // With the required constant the envelope covers every t.
  const AuditRow covered = w1_check(Envelope::make(5, 20, c * (1 + 1e-12)), ts);
  CHECK(covered.ratio <= 1.0);

  const AuditRow g = gamma_sup_check(2, 10, 2001);
  CHECK(g.lhs >= std::abs(gamma_mn(2, 10, 1.0)));
  CHECK(g.envelope == doctest::Approx((1 + std::log(5.0)) / 8));
}

TEST_CASE("zero probabilities inside the band")
{
  const KappaSeq one = KappaSeq::from_rational(1, 1, KappaMode::exact_multiple);
  CHECK(sigma_eps(1.0, 0.2) == doctest::Approx(1.5));
  CHECK(lemmino_check(one, 0.2, 40, 50));
  CHECK_THROWS_AS(lemmino_check(one, 0.2, 40, 70), std::invalid_argument);
  CHECK_THROWS_AS(lemmino_check(one, 0.6, 40, 50), std::invalid_argument);
  // Small eps: sigma near 2, the band widens and the law still vanishes.
  const double eps = 1e-3;
  const double sigma = sigma_eps(1.0, eps);
  for (int m : {10, 30, 60})
    for (int n = m + 1; n < sigma * m; n += 3)
      REQUIRE(lemmino_check(one, eps, m, n));
  // A floor sequence that is too coarse for small m is rejected.
  CHECK_THROWS_AS(lemmino_check(KappaSeq::from_decimal("1.5"), 0.1, 3, 4), std::invalid_argument);
}

TEST_CASE("covariance audit regimes")
{
  const KappaSeq one = KappaSeq::from_rational(1, 1, KappaMode::exact_multiple);
  const std::pair<int, int> pairs[] = {{3, 3}, {10, 12}, {5, 40}};
  const auto rows = covariance_audit(one, pairs, 1.0, 0.2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].label == "diagonal");
  CHECK(rows[0].lhs == doctest::Approx(2.0));
  CHECK(rows[0].envelope == 3.0);
  CHECK(rows[1].label == "near");
  CHECK(rows[1].envelope == 1.0);
  CHECK(rows[2].label == "far");
  CHECK(rows[2].lhs == doctest::Approx(std::abs(cov_Y(one, 5, 40))));
}

TEST_CASE("grids")
{
  for (auto [m, n] : grids::stimabase_pairs()) {
    CHECK(m >= 2);
    CHECK(n > m);
    CHECK(n <= 1000);
  }
  for (double x : grids::slopes()) {
    if (x < 1.0)
      continue;
    const double eps = grids::covariance_eps(x);
    CHECK(eps < 1.0 / (2 * x));
    for (auto [m, n] : grids::covariance_pairs(x, eps))
      CHECK(n >= m);
  }
}
