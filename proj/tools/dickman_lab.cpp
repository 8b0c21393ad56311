// Command-line front end: one subcommand per computation or audit, reports as
// CSV or JSON.
//
// Exit status: 0 success, 1 audit failure or golden regression, 2 usage error.

#include "dickman/audits.hpp"
#include "dickman/cumulants.hpp"
#include "dickman/exact_dist.hpp"
#include "dickman/golden.hpp"
#include "dickman/kappa.hpp"
#include "dickman/report.hpp"
#include "dickman/rho_table.hpp"
#include "dickman/simulation.hpp"
#include "dickman/spectral.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

using namespace dickman;

struct AuditFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "csv";
  std::string out;
  std::string golden = "golden/calibration.json";
  bool regenerate_golden = false;

  double xmax = 30.0;
  double step = 1e-3;

  std::vector<double> x = {1.0};
  std::string x_text;
  std::string kappa_mode = "floor";
  std::vector<int> n_list;
  int m = -1;
  int n = -1;
  double eps = 0.0;
  double c_const = 1.0;
  bool exact = false;

  int n_max = 10;
  std::string table = "a";

  std::vector<std::uint64_t> horizons = {1000000};
  int paths = 32;
  std::uint64_t seed = 20240601;
  int n_cut = 2000;
};

KappaSeq kappa_from(const Options &o, double x)
{
  const KappaMode mode = parse_kappa_mode(o.kappa_mode);
  if (!o.x_text.empty() && o.x.size() == 1)
    return KappaSeq::from_decimal(o.x_text, mode);
  return KappaSeq::from_double(x, mode);
}

nlohmann::ordered_json base_config(const Options &o)
{
  nlohmann::ordered_json c;
  c["xmax"] = o.xmax;
  c["step"] = o.step;
  return c;
}

// Calibrated audits: check against, or rewrite, the golden file.
class GoldenGate {
public:
  explicit GoldenGate(const Options &o) : path_(o.golden), regenerate_(o.regenerate_golden)
  {
    file_ = GoldenFile::load(path_);
  }

  void submit(const Calibration &c, Report &report)
  {
    report.manifest["calibration"][c.name] = {{"constant", c.entry.constant}, {"grid_hash", c.entry.grid_hash}};
    if (regenerate_) {
      file_.set(c);
      dirty_ = true;
      return;
    }
    const GoldenStatus s = file_.check(c);
    if (s != GoldenStatus::ok) {
      const auto rec = file_.find(c.name);
      failures_.push_back(fmt::format("{}: {} (observed {:.17g}, recorded {})", c.name, to_string(s),
                                      c.entry.constant, rec ? format_double(rec->constant) : "none"));
    }
  }

  void finish()
  {
    if (dirty_) {
      file_.save(path_);
      fmt::print(std::cerr, "golden file {} regenerated\n", path_.string());
    }
    if (!failures_.empty()) {
      std::string msg = fmt::format("golden check against {} failed:", path_.string());
      for (const auto &f : failures_)
        msg += "\n  " + f;
      throw AuditFailure(msg);
    }
  }

private:
  std::filesystem::path path_;
  bool regenerate_;
  GoldenFile file_;
  bool dirty_ = false;
  std::vector<std::string> failures_;
};

std::vector<Cell> audit_cells(const AuditRow &r)
{
  return {std::int64_t{r.m}, std::int64_t{r.n}, r.x, r.kappa_m, r.kappa_n, r.lhs, r.envelope, r.ratio, r.label};
}

const std::vector<std::string> kAuditColumns = {"m",   "n",        "x",     "kappa_m", "kappa_n",
                                                "lhs", "envelope", "ratio", "label"};

Report cmd_rho(const Options &o)
{
  const RhoTable table = RhoTable::build(o.xmax, o.step);
  Report r{"rho", base_config(o), {"x", "rho", "density", "cdf"}};
  r.config["x"] = o.x;
  for (double x : o.x)
    r.add_row({x, table.rho(x), table.density(x), table.cdf(x)});
  return r;
}

Report cmd_pmf(const Options &o)
{
  const int m = std::max(o.m, 0);
  const Pmf p = pmf(m, o.n, o.exact ? PmfMode::exact_rational : PmfMode::floating);
  Report r{"pmf", {}, {"value", "probability"}};
  r.config["m"] = m;
  r.config["n"] = o.n;
  r.config["mode"] = o.exact ? "exact-rational" : "floating";
  if (o.exact)
    r.columns.push_back("exact");
  for (std::int64_t v = 0; v <= p.max_value(); ++v) {
    if (p.probs()[v] == 0.0)
      continue;
    std::vector<Cell> row = {v, p.probs()[v]};
    if (o.exact)
      row.emplace_back(p.exact_at(v).str());
    r.add_row(std::move(row));
  }
  return r;
}

Report cmd_llt(const Options &o)
{
  const RhoTable table = RhoTable::build(std::max(o.xmax, std::ceil(o.x.front()) + 1.0), o.step);
  const KappaSeq kappa = kappa_from(o, o.x.front());
  const std::vector<int> ns = o.n_list.empty() ? std::vector<int>{125, 250, 500, 1000, 2000} : o.n_list;
  Report r{"llt-table", base_config(o), {"n", "kappa_n", "n_prob", "target", "abs_error"}};
  r.config["x"] = kappa.describe();
  r.config["n"] = ns;
  for (const AuditRow &row : llt_table(kappa, ns, table))
    r.add_row({std::int64_t{row.n}, row.kappa_n, row.lhs, row.envelope, row.error});
  return r;
}

Report cmd_stimabase(const Options &o)
{
  Report r{"stimabase", {}, kAuditColumns};
  r.config["kappa_mode"] = o.kappa_mode;
  if (o.m >= 0 && o.n >= 0) {
    r.config["m"] = o.m;
    r.config["n"] = o.n;
    r.config["x"] = o.x.front();
    r.add_row(audit_cells(stimabase_check(o.m, o.n, kappa_from(o, o.x.front()))));
    return r;
  }
  r.config["grid"] = grids::kGridVersion;
  std::vector<AuditRow> rows;
  for (double x : grids::slopes()) {
    const KappaSeq kappa = KappaSeq::from_double(x, parse_kappa_mode(o.kappa_mode));
    for (auto [m, n] : grids::stimabase_pairs())
      rows.push_back(stimabase_check(m, n, kappa));
  }
  for (const auto &row : rows)
    r.add_row(audit_cells(row));
  GoldenGate gate(o);
  gate.submit(calibrate("stimabase", rows), r);
  gate.finish();
  return r;
}

Report cmd_w1(const Options &o)
{
  Report r{"w1", {}, kAuditColumns};
  r.config["grid"] = grids::kGridVersion;
  r.config["c_const"] = o.c_const;
  const auto ts = grids::w1_ts();
  std::vector<AuditRow> rows;
  for (auto [m, n] : grids::w1_pairs()) {
    AuditRow row = w1_check(Envelope::make(m, n, o.c_const), ts);
    // The calibrated quantity is the constant inside f, not the ratio.
    row.ratio = w1_required_constant(m, n, ts);
    row.label = "w1";
    rows.push_back(row);
  }
  for (const auto &row : rows)
    r.add_row(audit_cells(row));
  GoldenGate gate(o);
  gate.submit(calibrate("w1", rows), r);
  gate.finish();
  return r;
}

Report cmd_w2(const Options &o)
{
  Report r{"w2", base_config(o), kAuditColumns};
  r.config["c_const"] = o.c_const;
  std::vector<std::pair<int, int>> pairs;
  const bool single = o.m >= 0 && o.n >= 0;
  if (single)
    pairs.emplace_back(o.m, o.n);
  else
    pairs = grids::w2_pairs();
  double reach = o.xmax;
  for (auto [m, n] : pairs)
    reach = std::max(reach, (n + m + 1) / 2.0 + 1.0);
  const RhoTable table = RhoTable::build(reach, o.step);
  r.config["table_end"] = table.x_max();

  std::vector<AuditRow> rows;
  for (auto [m, n] : pairs)
    rows.push_back(w2_check(m, n, Envelope::make(m, n, o.c_const), table));
  for (const auto &row : rows)
    r.add_row(audit_cells(row));
  if (!single) {
    r.config["grid"] = grids::kGridVersion;
    GoldenGate gate(o);
    gate.submit(calibrate("w2", rows), r);
    gate.finish();
  }
  return r;
}

Report cmd_gamma_sup(const Options &o)
{
  Report r{"gamma-sup", {}, kAuditColumns};
  r.config["grid"] = grids::kGridVersion;
  std::vector<AuditRow> rows;
  for (auto [m, n] : grids::gamma_pairs())
    rows.push_back(gamma_sup_check(m, n));
  for (const auto &row : rows)
    r.add_row(audit_cells(row));
  GoldenGate gate(o);
  gate.submit(calibrate("gamma_sup", rows), r);
  gate.finish();
  return r;
}

Report cmd_zs(const Options &o)
{
  const RhoTable table = RhoTable::build(o.xmax, o.step);
  const std::vector<int> ns = o.n_list.empty() ? std::vector<int>{100, 200, 400, 800} : o.n_list;
  Report r{"zs", base_config(o), {"n", "l2", "limit", "gap"}};
  r.config["n"] = ns;
  for (int n : ns) {
    const AuditRow row = zs_check(n, table);
    r.add_row({std::int64_t{n}, row.lhs, row.envelope, row.error});
  }
  return r;
}

Report cmd_lemmino(const Options &o)
{
  const KappaSeq kappa = kappa_from(o, o.x.front());
  const double eps = o.eps > 0.0 ? o.eps : 0.5 / (2.0 * kappa.x());
  Report r{"lemmino", {}, {"m", "n", "kappa_m", "kappa_n", "sigma", "zero"}};
  r.config["x"] = kappa.describe();
  r.config["eps"] = eps;
  const double sigma = sigma_eps(kappa.x(), eps);

  std::vector<std::pair<int, int>> pairs;
  if (o.m >= 0 && o.n >= 0) {
    pairs.emplace_back(o.m, o.n);
  } else {
    for (int m : {20, 40, 80, 160, 320}) {
      const int top = static_cast<int>(std::ceil(sigma * m)) - 1;
      for (int n : {m + 1, (m + top) / 2, top})
        if (n > m && n < sigma * m && (pairs.empty() || pairs.back() != std::pair{m, n}))
          pairs.emplace_back(m, n);
    }
  }
  bool all = true;
  for (auto [m, n] : pairs) {
    const bool zero = lemmino_check(kappa, eps, m, n);
    all = all && zero;
    r.add_row({std::int64_t{m}, std::int64_t{n}, kappa(m), kappa(n), sigma, std::int64_t{zero ? 1 : 0}});
  }
  if (!all)
    throw AuditFailure("lemmino: a probability inside the band is not zero");
  return r;
}

Report cmd_cov(const Options &o)
{
  Report r{"cov-audit", {}, kAuditColumns};
  r.config["c_const"] = o.c_const;
  r.config["grid"] = grids::kGridVersion;
  const KappaMode mode = parse_kappa_mode(o.kappa_mode);
  std::map<std::string, std::vector<AuditRow>> by_regime;
  for (double x : grids::slopes()) {
    if (x < 1.0)
      continue;  // floor(x n) is not strictly increasing
    const KappaSeq kappa = KappaSeq::from_double(x, mode);
    const double eps = grids::covariance_eps(x);
    const auto pairs = grids::covariance_pairs(x, eps);
    for (AuditRow &row : covariance_audit(kappa, pairs, o.c_const, eps)) {
      r.add_row(audit_cells(row));
      by_regime[row.label].push_back(std::move(row));
    }
  }
  GoldenGate gate(o);
  for (const auto &[regime, rows] : by_regime)
    gate.submit(calibrate("cov_" + regime, rows), r);
  gate.finish();
  return r;
}

Report cmd_cumulants(const Options &o)
{
  Report r{"cumulants", {}, {}};
  r.config["n_max"] = o.n_max;
  r.config["table"] = o.table;
  if (o.table == "a") {
    r.columns = {"n", "k", "a_kn", "stirling2"};
    for (int n = 1; n <= o.n_max; ++n)
      for (int k = 1; k <= n; ++k)
        r.add_row({std::int64_t{n}, std::int64_t{k}, a_coeff(k, n).str(), stirling2(n, k).str()});
  } else if (o.table == "poly") {
    r.columns = {"n", "power", "coefficient"};
    for (int n = 1; n <= o.n_max; ++n) {
      const CumulantPoly c = n == 1 ? cumulant_recurrence(1) : cumulant_explicit(n);
      for (std::size_t i = 0; i < c.coeffs.size(); ++i)
        r.add_row({std::int64_t{n}, static_cast<std::int64_t>(i), c.coeffs[i].str()});
    }
  } else if (o.table == "ratio") {
    r.columns = {"n", "power", "coefficient"};
    for (int n = 2; n <= o.n_max; ++n) {
      const auto series = cumulant_ratio_series(n);
      for (std::size_t i = 0; i < series.size(); ++i)
        r.add_row({std::int64_t{n}, static_cast<std::int64_t>(i + 1), series[i].str()});
    }
  } else {
    throw std::invalid_argument(fmt::format("cumulants: unknown table '{}' (a, poly, ratio)", o.table));
  }
  return r;
}

nlohmann::ordered_json sim_config(const Options &o, const KappaSeq &kappa)
{
  nlohmann::ordered_json c;
  c["seed"] = o.seed;
  c["N"] = o.horizons;
  c["x"] = kappa.describe();
  c["mode"] = to_string(kappa.mode());
  c["paths"] = o.paths;
  return c;
}

void warn_small_slope(const KappaSeq &kappa)
{
  if (!kappa.strictly_increasing())
    fmt::print(std::cerr, "warning: x < 1, kappa_n is not strictly increasing and the almost sure "
                          "limit is not guaranteed\n");
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Report cmd_aslt(const Options &o)
{
  const auto t0 = Clock::now();
  const KappaSeq kappa = kappa_from(o, o.x.front());
  warn_small_slope(kappa);
  const std::uint64_t N = o.horizons.back();
  const auto seeds = make_seeds(o.seed, o.paths);
  Report r{"aslt", sim_config(o, kappa), {"path", "N", "hits", "log_avg", "aux_hits"}};
  for (const PathEstimate &p : simulate_paths(kappa, N, seeds))
    r.add_row({static_cast<std::int64_t>(p.seed.index), static_cast<std::int64_t>(p.N),
               static_cast<std::int64_t>(p.hits), p.log_avg, static_cast<std::int64_t>(p.aux_hits)});
  r.manifest["wall_time_s"] = seconds_since(t0);
  return r;
}

Report cmd_estimate_gamma(const Options &o)
{
  const auto t0 = Clock::now();
  const std::uint64_t N = o.horizons.back();
  const KappaSeq one = KappaSeq::from_rational(1, 1, KappaMode::exact_multiple);
  const GammaEstimate est = estimate_gamma(N, make_seeds(o.seed, o.paths));
  const RhoTable table = RhoTable::build(o.xmax, o.step);
  Report r{"estimate-gamma",
           sim_config(o, one),
           {"N", "paths", "mean_log_avg", "gamma_hat", "oracle_mean", "exp_minus_gamma"}};
  r.config["n_cut"] = o.n_cut;
  r.add_row({static_cast<std::int64_t>(N), std::int64_t{o.paths}, est.mean_log_avg, est.gamma_hat,
             oracle_mean_log_avg(one, N, o.n_cut, table), std::exp(-kEulerGamma)});
  r.manifest["wall_time_s"] = seconds_since(t0);
  return r;
}

Report cmd_estimate_rho(const Options &o)
{
  const auto t0 = Clock::now();
  const KappaSeq kappa = kappa_from(o, o.x.front());
  const std::uint64_t N = o.horizons.back();
  const RhoEstimate est = estimate_rho(kappa, N, make_seeds(o.seed, o.paths));
  const RhoTable table = RhoTable::build(std::max(o.xmax, std::ceil(kappa.x()) + 1.0), o.step);
  Report r{"estimate-rho", sim_config(o, kappa), {"N", "paths", "hits", "reference_hits", "rho_hat", "rho"}};
  r.add_row({static_cast<std::int64_t>(N), std::int64_t{o.paths}, static_cast<std::int64_t>(est.hits),
             static_cast<std::int64_t>(est.reference_hits), est.rho_hat, table.rho(kappa.x())});
  r.manifest["wall_time_s"] = seconds_since(t0);
  return r;
}

Report cmd_dispersion(const Options &o)
{
  const auto t0 = Clock::now();
  const KappaSeq kappa = kappa_from(o, o.x.front());
  warn_small_slope(kappa);
  Report r{"dispersion", sim_config(o, kappa), {"N", "paths", "mean_log_avg", "sd_log_avg"}};
  for (const DispersionRow &row : dispersion_diagnostic(kappa, o.horizons, make_seeds(o.seed, o.paths)))
    r.add_row({static_cast<std::int64_t>(row.N), std::int64_t{row.paths}, row.mean, row.sd});
  r.manifest["wall_time_s"] = seconds_since(t0);
  return r;
}

std::ostream *open_output(const Options &o, const std::string &command, std::ofstream &file)
{
  std::filesystem::path target = o.out;
  if (target.empty()) {
    if (const char *dir = std::getenv("DICKMAN_OUT_DIR"); dir && *dir)
      target = std::filesystem::path(dir) / fmt::format("{}.{}", command, o.format);
  }
  if (target.empty())
    return &std::cout;
  if (target.has_parent_path())
    std::filesystem::create_directories(target.parent_path());
  file.open(target);
  if (!file)
    throw std::runtime_error(fmt::format("cannot open {}", target.string()));
  return &file;
}

} // namespace

int main(int argc, char **argv)
{
  Options o;
  CLI::App app{"Dickman distribution lab: exact laws, limit-theorem audits and simulations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", o.out, "Report file (default stdout or $DICKMAN_OUT_DIR/<command>.<format>)");
  app.add_option("--golden", o.golden, "Golden file of calibrated constants");
  app.add_flag("--regenerate-golden", o.regenerate_golden, "Rewrite golden constants instead of checking them");
  app.add_option("--xmax", o.xmax, "Dickman table end")->check(CLI::Range(2.0, 1e4));
  app.add_option("--step", o.step, "Dickman table step (1/N, at most 1e-2)")->check(CLI::PositiveNumber);

  std::map<CLI::App *, std::function<Report(const Options &)>> handlers;
  const auto add = [&](const char *name, const char *help, auto fn) {
    CLI::App *sub = app.add_subcommand(name, help);
    handlers[sub] = fn;
    return sub;
  };
  const auto x_opt = [&](CLI::App *sub) {
    sub->add_option("--x", o.x, "Target slope(s) x > 0")->delimiter(',')->check(CLI::PositiveNumber);
    sub->add_option("--kappa-mode", o.kappa_mode, "floor, round or exact-multiple")
        ->check(CLI::IsMember({"floor", "round", "exact-multiple"}));
  };
  const auto mn_opt = [&](CLI::App *sub) {
    sub->add_option("--m", o.m, "Lower index m")->check(CLI::NonNegativeNumber);
    sub->add_option("--n", o.n, "Upper index n")->check(CLI::PositiveNumber);
  };
  const auto sim_opt = [&](CLI::App *sub) {
    x_opt(sub);
    sub->add_option("--N", o.horizons, "Horizon(s)")->delimiter(',')->check(CLI::PositiveNumber);
    sub->add_option("--paths", o.paths, "Number of paths")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Master seed");
  };

  auto *rho = add("rho", "Dickman rho, density and distribution at x", cmd_rho);
  rho->add_option("--x", o.x, "Points")->delimiter(',')->check(CLI::NonNegativeNumber);

  auto *pm = add("pmf", "Exact law of T_m^n", cmd_pmf);
  pm->add_option("--n", o.n, "Upper index n")->required()->check(CLI::PositiveNumber);
  pm->add_option("--m", o.m, "Lower index m (default 0)")->check(CLI::NonNegativeNumber);
  pm->add_flag("--exact", o.exact, "Exact rational arithmetic (n <= 64)");

  auto *llt = add("llt-table", "n P(T_n = kappa_n) against e^-gamma rho(x)", cmd_llt);
  x_opt(llt);
  llt->add_option("--n", o.n_list, "List of n")->delimiter(',')->check(CLI::PositiveNumber);

  auto *st = add("stimabase", "Point probability against window probability", cmd_stimabase);
  x_opt(st);
  mn_opt(st);

  auto *w1 = add("w1", "Characteristic function distance against f_{m,n}", cmd_w1);
  w1->add_option("--c", o.c_const, "Constant inside f")->check(CLI::PositiveNumber);

  auto *w2 = add("w2", "Kolmogorov distance against g_{m,n}", cmd_w2);
  mn_opt(w2);
  w2->add_option("--c", o.c_const, "Constant inside g")->check(CLI::PositiveNumber);

  add("gamma-sup", "sup |gamma_{m,n}| against (1 + log(n/m))/(n - m)", cmd_gamma_sup);

  auto *zs = add("zs", "L2 norm of the characteristic function of T_n/n", cmd_zs);
  zs->add_option("--n", o.n_list, "List of n")->delimiter(',')->check(CLI::PositiveNumber);

  auto *lem = add("lemmino", "Zero point probabilities inside the sigma band", cmd_lemmino);
  x_opt(lem);
  mn_opt(lem);
  lem->add_option("--eps", o.eps, "Band parameter, 0 < eps < 1/(2x)")->check(CLI::PositiveNumber);

  auto *cov = add("cov-audit", "Covariance of Y_m, Y_n against the correlation bounds", cmd_cov);
  cov->add_option("--kappa-mode", o.kappa_mode, "floor, round or exact-multiple")
      ->check(CLI::IsMember({"floor", "round", "exact-multiple"}));
  cov->add_option("--c", o.c_const, "Constant inside g")->check(CLI::PositiveNumber);

  auto *cum = add("cumulants", "Exact a_{k,n}, Stirling numbers and cumulant polynomials", cmd_cumulants);
  cum->add_option("--n-max", o.n_max, "Largest n")->check(CLI::Range(1, 200));
  cum->add_option("--table", o.table, "a, poly or ratio")->check(CLI::IsMember({"a", "poly", "ratio"}));

  sim_opt(add("aslt", "Per-path log averages of hit indicators", cmd_aslt));
  auto *eg = add("estimate-gamma", "Euler constant from the log-average of T_n = n", cmd_estimate_gamma);
  eg->add_option("--N", o.horizons, "Horizon")->delimiter(',')->check(CLI::PositiveNumber);
  eg->add_option("--paths", o.paths, "Number of paths")->check(CLI::PositiveNumber);
  eg->add_option("--seed", o.seed, "Master seed");
  eg->add_option("--n-cut", o.n_cut, "Exact DP range of the oracle")->check(CLI::PositiveNumber);
  sim_opt(add("estimate-rho", "rho(x) from the ratio of hit counts", cmd_estimate_rho));
  sim_opt(add("dispersion", "Across-path spread of log averages", cmd_dispersion));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // --x 1.5 keeps its decimal text so that the slope is exactly 3/2.
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string_view(argv[i]) == "--x" && std::string_view(argv[i + 1]).find(',') == std::string_view::npos)
      o.x_text = argv[i + 1];

  CLI::App *sub = app.get_subcommands().front();
  try {
    const Report report = handlers.at(sub)(o);
    std::ofstream file;
    std::ostream *out = open_output(o, report.command, file);
    report.write(*out, parse_report_format(o.format));
    return 0;
  } catch (const AuditFailure &e) {
    fmt::print(std::cerr, "{}\n", e.what());
    return 1;
  } catch (const std::invalid_argument &e) {
    fmt::print(std::cerr, "usage error: {}\n", e.what());
    return 2;
  } catch (const std::out_of_range &e) {
    fmt::print(std::cerr, "usage error: {}\n", e.what());
    return 2;
  } catch (const std::exception &e) {
    fmt::print(std::cerr, "error: {}\n", e.what());
    return 1;
  }
}
