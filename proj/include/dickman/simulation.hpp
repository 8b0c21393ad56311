#pragma once

#include "dickman/kappa.hpp"
#include "dickman/rho_table.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace dickman {

/// A path's random stream is fixed by (master seed, path index) alone.
struct PathSeed {
  std::uint64_t master = 0;
  std::uint64_t index = 0;
};

/// Seeds for paths 0..count-1 under one master seed.
std::vector<PathSeed> make_seeds(std::uint64_t master, int count);

/// Bernoulli(1/n) with P(1) exactly 1/n: a 64-bit uniform u is accepted when
/// u < n q, q = floor(2^64/n), and the draw is 1 iff u < q.
class InverseBernoulli {
public:
  explicit InverseBernoulli(std::uint64_t n);

  template <class Engine>
  bool operator()(Engine &engine) const
  {
    if (q_ == 0)
      return true;
    for (;;) {
      const std::uint64_t u = engine();
      if (full_range_ || u < limit_)
        return u < q_;
    }
  }

private:
  std::uint64_t q_ = 0;  // 0 encodes n = 1
  std::uint64_t limit_ = 0;
  bool full_range_ = false;
};

/// mt19937_64 seeded through std::seed_seq from the four 32-bit halves of
/// (master, index).
std::mt19937_64 make_engine(PathSeed seed);

struct PathEstimate {
  PathSeed seed;
  std::uint64_t N = 0;
  std::uint64_t hits = 0;      // #{n <= N : T_n = kappa_n}
  double log_avg = 0.0;        // hits / log N, 0 for N = 1
  std::uint64_t aux_hits = 0;  // #{n <= N : T_n = n}, for the ratio estimator
  bool kappa_warning = false;  // kappa is not strictly increasing (x < 1)
};

/// One streaming pass n = 1..N in constant memory. Throws
/// std::invalid_argument for N < 1 and std::overflow_error when T could
/// overflow 64 bits (N > 6e9).
PathEstimate simulate_path(const KappaSeq &kappa, std::uint64_t N, PathSeed seed);

/// The same pass, snapshotting at each checkpoint (ascending).
std::vector<PathEstimate> simulate_path_checkpoints(const KappaSeq &kappa, std::span<const std::uint64_t> checkpoints,
                                                    PathSeed seed);

/// Runs paths in parallel; results are in seed order.
std::vector<PathEstimate> simulate_paths(const KappaSeq &kappa, std::uint64_t N, std::span<const PathSeed> seeds);

struct GammaEstimate {
  double gamma_hat = 0.0;     // -log(mean_log_avg)
  double mean_log_avg = 0.0;  // estimates e^{-gamma}
  std::vector<PathEstimate> paths;
};

/// kappa_n = n. Throws std::domain_error if no path ever hits.
GammaEstimate estimate_gamma(std::uint64_t N, std::span<const PathSeed> seeds);

struct RhoEstimate {
  double rho_hat = 0.0;
  std::uint64_t hits = 0;            // pooled hits of kappa
  std::uint64_t reference_hits = 0;  // pooled hits of kappa_n = n on the same paths
  std::vector<PathEstimate> paths;
};

/// Pooled ratio of hits of kappa against hits of kappa_n = n. Needs x >= 1;
/// throws std::domain_error when the reference never hits.
RhoEstimate estimate_rho(const KappaSeq &kappa, std::uint64_t N, std::span<const PathSeed> seeds);

struct DispersionRow {
  std::uint64_t N = 0;
  int paths = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation of log_avg, 0 for one path
};

std::vector<DispersionRow> dispersion_diagnostic(const KappaSeq &kappa, std::span<const std::uint64_t> N_list,
                                                 std::span<const PathSeed> seeds);

/// Expected log_avg at horizon N: exact P(T_n = kappa_n) for n <= n_cut plus
/// the tail e^{-gamma} rho(x) / n for n_cut < n <= N, over log N.
double oracle_mean_log_avg(const KappaSeq &kappa, std::uint64_t N, int n_cut, const RhoTable &table);

/// Counts of T_n over `draws` independent samples; index = value.
std::vector<std::uint64_t> sample_sum_histogram(int n, std::uint64_t draws, PathSeed seed);

} // namespace dickman
