#include "dickman/simulation.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "dickman/exact_dist.hpp"

namespace dickman {

namespace {

constexpr std::uint64_t kMaxHorizon = 6'000'000'000ULL;

template <class Fn>
void parallel_for(std::size_t count, Fn fn)
{
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers)
        fn(i);
    });
}

double log_average(std::uint64_t hits, std::uint64_t N)
{
  return N >= 2 ? static_cast<double>(hits) / std::log(static_cast<double>(N)) : 0.0;
}

} // namespace

std::vector<PathSeed> make_seeds(std::uint64_t master, int count)
{
  std::vector<PathSeed> seeds;
  seeds.reserve(std::max(count, 0));
  for (int i = 0; i < count; ++i)
    seeds.push_back({master, static_cast<std::uint64_t>(i)});
  return seeds;
}

InverseBernoulli::InverseBernoulli(std::uint64_t n)
{
  if (n == 0)
    throw std::invalid_argument("InverseBernoulli: n must be >= 1");
  if (n == 1)
    return;
  constexpr std::uint64_t top = ~0ULL;  // 2^64 - 1
  q_ = top / n + (top % n == n - 1 ? 1 : 0);
  const unsigned __int128 limit = static_cast<unsigned __int128>(q_) * n;
  full_range_ = limit > top;
  limit_ = full_range_ ? 0 : static_cast<std::uint64_t>(limit);
}

std::mt19937_64 make_engine(PathSeed seed)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed.master), static_cast<std::uint32_t>(seed.master >> 32),
                    static_cast<std::uint32_t>(seed.index), static_cast<std::uint32_t>(seed.index >> 32)};
  return std::mt19937_64(seq);
}

std::vector<PathEstimate> simulate_path_checkpoints(const KappaSeq &kappa, std::span<const std::uint64_t> checkpoints,
                                                    PathSeed seed)
{
  if (checkpoints.empty())
    return {};
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) || checkpoints.front() < 1)
    throw std::invalid_argument("simulate_path: horizons must be ascending and >= 1");
  if (checkpoints.back() > kMaxHorizon)
    throw std::overflow_error(fmt::format("simulate_path: N = {} would overflow the running sum", checkpoints.back()));

  auto engine = make_engine(seed);
  KappaCursor cursor(kappa);
  std::vector<PathEstimate> out;
  out.reserve(checkpoints.size());

  std::uint64_t total = 0;
  std::uint64_t hits = 0;
  std::uint64_t aux = 0;
  std::size_t next_cp = 0;
  for (std::uint64_t n = 1; next_cp < checkpoints.size(); ++n) {
    if (InverseBernoulli(n)(engine))
      total += n;
    if (static_cast<std::int64_t>(total) == cursor.next())
      ++hits;
    if (total == n)
      ++aux;
    while (next_cp < checkpoints.size() && checkpoints[next_cp] == n) {
      out.push_back({seed, n, hits, log_average(hits, n), aux, !kappa.strictly_increasing()});
      ++next_cp;
    }
  }
  return out;
}

PathEstimate simulate_path(const KappaSeq &kappa, std::uint64_t N, PathSeed seed)
{
  if (N < 1)
    throw std::invalid_argument("simulate_path: N must be >= 1");
  const std::uint64_t cp[] = {N};
  return simulate_path_checkpoints(kappa, cp, seed).front();
}

std::vector<PathEstimate> simulate_paths(const KappaSeq &kappa, std::uint64_t N, std::span<const PathSeed> seeds)
{
  if (N < 1)
    throw std::invalid_argument("simulate_paths: N must be >= 1");
  std::vector<PathEstimate> out(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t i) { out[i] = simulate_path(kappa, N, seeds[i]); });
  return out;
}

GammaEstimate estimate_gamma(std::uint64_t N, std::span<const PathSeed> seeds)
{
  if (seeds.empty())
    throw std::invalid_argument("estimate_gamma: need at least one path");
  GammaEstimate est;
  est.paths = simulate_paths(KappaSeq::from_rational(1, 1, KappaMode::exact_multiple), N, seeds);
  double sum = 0.0;
  std::uint64_t hits = 0;
  for (const PathEstimate &p : est.paths) {
    sum += p.log_avg;
    hits += p.hits;
  }
  if (hits == 0 || sum <= 0.0)
    throw std::domain_error("estimate_gamma: no path hit kappa_n = n, the estimator is undefined");
  est.mean_log_avg = sum / static_cast<double>(est.paths.size());
  est.gamma_hat = -std::log(est.mean_log_avg);
  return est;
}

RhoEstimate estimate_rho(const KappaSeq &kappa, std::uint64_t N, std::span<const PathSeed> seeds)
{
  if (kappa.x() < 1.0)
    throw std::invalid_argument("estimate_rho: the ratio estimator needs x >= 1");
  if (seeds.empty())
    throw std::invalid_argument("estimate_rho: need at least one path");
  RhoEstimate est;
  est.paths = simulate_paths(kappa, N, seeds);
  for (const PathEstimate &p : est.paths) {
    est.hits += p.hits;
    est.reference_hits += p.aux_hits;
  }
  if (est.reference_hits == 0)
    throw std::domain_error("estimate_rho: no hits of kappa_n = n, the ratio is undefined");
  est.rho_hat = static_cast<double>(est.hits) / static_cast<double>(est.reference_hits);
  return est;
}

std::vector<DispersionRow> dispersion_diagnostic(const KappaSeq &kappa, std::span<const std::uint64_t> N_list,
                                                 std::span<const PathSeed> seeds)
{
  if (!std::is_sorted(N_list.begin(), N_list.end()))
    throw std::invalid_argument("dispersion: N_list must be increasing");
  std::vector<std::vector<PathEstimate>> per_path(seeds.size());
  parallel_for(seeds.size(),
               [&](std::size_t i) { per_path[i] = simulate_path_checkpoints(kappa, N_list, seeds[i]); });

  std::vector<DispersionRow> rows;
  for (std::size_t c = 0; c < N_list.size(); ++c) {
    DispersionRow row;
    row.N = N_list[c];
    row.paths = static_cast<int>(seeds.size());
    double sum = 0.0;
    for (const auto &p : per_path)
      sum += p[c].log_avg;
    row.mean = seeds.empty() ? 0.0 : sum / static_cast<double>(seeds.size());
    if (seeds.size() > 1) {
      double ss = 0.0;
      for (const auto &p : per_path)
        ss += (p[c].log_avg - row.mean) * (p[c].log_avg - row.mean);
      row.sd = std::sqrt(ss / static_cast<double>(seeds.size() - 1));
    }
    rows.push_back(row);
  }
  return rows;
}

double oracle_mean_log_avg(const KappaSeq &kappa, std::uint64_t N, int n_cut, const RhoTable &table)
{
  if (N < 2)
    throw std::invalid_argument("oracle_mean_log_avg: N must be >= 2");
  if (n_cut < 1)
    throw std::invalid_argument("oracle_mean_log_avg: n_cut must be >= 1");
  const int exact_upto = static_cast<int>(std::min<std::uint64_t>(N, static_cast<std::uint64_t>(n_cut)));
  const std::vector<double> hits = hit_probabilities(kappa, exact_upto);
  double sum = 0.0;
  for (int n = 1; n <= exact_upto; ++n)
    sum += hits[n];
  if (N > static_cast<std::uint64_t>(exact_upto)) {
    // sum_{n_cut < n <= N} 1/n = digamma(N + 1) - digamma(n_cut + 1)
    const double harmonic = boost::math::digamma(static_cast<double>(N) + 1.0) -
                            boost::math::digamma(static_cast<double>(exact_upto) + 1.0);
    sum += table.density(kappa.x()) * harmonic;
  }
  return sum / std::log(static_cast<double>(N));
}

std::vector<std::uint64_t> sample_sum_histogram(int n, std::uint64_t draws, PathSeed seed)
{
  if (n < 1)
    throw std::invalid_argument("sample_sum_histogram: n must be >= 1");
  std::vector<InverseBernoulli> coins;
  coins.reserve(n);
  for (int k = 1; k <= n; ++k)
    coins.emplace_back(static_cast<std::uint64_t>(k));
  auto engine = make_engine(seed);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) * (n + 1) / 2 + 1, 0);
  for (std::uint64_t d = 0; d < draws; ++d) {
    std::size_t total = 0;
    for (int k = 1; k <= n; ++k)
      if (coins[k - 1](engine))
        total += static_cast<std::size_t>(k);
    ++counts[total];
  }
  return counts;
}

} // namespace dickman
