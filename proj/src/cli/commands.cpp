#include "qsparse/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "qsparse/core/parallel.hpp"
#include "qsparse/cli/stats.hpp"
#include "qsparse/core/entropy.hpp"
#include "qsparse/core/errors.hpp"
#include "qsparse/core/qft.hpp"
#include "qsparse/core/random.hpp"
#include "qsparse/enc/ksparse.hpp"
#include "qsparse/enc/qnsst.hpp"
#include "qsparse/enc/scalar_field.hpp"
#include "qsparse/enc/weierstrass.hpp"
#include "qsparse/mincut/circuit_graph.hpp"
#include "qsparse/verify/criteria.hpp"
#include "qsparse/vqa/experiments.hpp"

namespace qsparse::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

std::vector<int> int_range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

// ---------------------------------------------------------------- shared sections

vqa::OptimizerConfig read_optimizer(ConfigSection s, const std::string& default_kind, int default_steps,
                                    int default_expansions = 10) {
  vqa::OptimizerConfig c;
  c.kind = vqa::parse_optimizer(s.get<std::string>("kind", default_kind));
  c.steps = s.get<int>("steps", default_steps);
  c.gradient_tolerance = s.get<double>("gradient_tolerance", 0.0);
  ConfigSection a = s.section("adamw");
  c.adamw.learning_rate = a.get<double>("learning_rate", c.adamw.learning_rate);
  c.adamw.beta1 = a.get<double>("beta1", c.adamw.beta1);
  c.adamw.beta2 = a.get<double>("beta2", c.adamw.beta2);
  c.adamw.epsilon = a.get<double>("epsilon", c.adamw.epsilon);
  c.adamw.weight_decay = a.get<double>("weight_decay", c.adamw.weight_decay);
  a.finish();
  ConfigSection g = s.section("cg");
  c.cg.armijo_c = g.get<double>("armijo_c", c.cg.armijo_c);
  c.cg.shrink = g.get<double>("shrink", c.cg.shrink);
  c.cg.max_backtracks = g.get<int>("max_backtracks", c.cg.max_backtracks);
  c.cg.initial_step = g.get<double>("initial_step", c.cg.initial_step);
  c.cg.max_expansions = g.get<int>("max_expansions", default_expansions);
  c.cg.restart_every = g.get<int>("restart_every", c.cg.restart_every);
  g.finish();
  s.finish();
  c.validate();
  return c;
}

using vqa::PairedSpec;
using vqa::Trajectory;

const char* arm_name(bool regularized) { return regularized ? "regularized" : "bare"; }

void add_trajectory_rows(CsvWriter& csv, const Trajectory& t, double baseline) {
  for (const auto& r : t.record.steps)
    csv.row({arm_name(t.regularized), cell(t.index), cell(static_cast<unsigned long long>(t.seed)),
             cell(r.step), cell(r.cost - baseline), cell(r.c_tee), cell(r.gamma), cell(r.total),
             cell(r.gradient_norm)});
}

// Quantiles of cost - baseline over the trajectories of one arm at the given steps.
void add_quantile_rows(CsvWriter& csv, const std::vector<Trajectory>& runs, bool regularized,
                       const std::vector<int>& steps, double baseline) {
  for (int s : steps) {
    std::vector<double> v;
    for (const auto& t : runs)
      if (t.regularized == regularized && s < static_cast<int>(t.record.steps.size()))
        v.push_back(t.record.steps[s].cost - baseline);
    if (v.empty()) continue;
    std::sort(v.begin(), v.end());
    csv.row({arm_name(regularized), cell(s), cell(static_cast<int>(v.size())), cell(v.front()),
             cell(quantile(v, 0.25)), cell(quantile(v, 0.5)), cell(quantile(v, 0.75)), cell(v.back())});
  }
}

Json arm_summary(const std::vector<Trajectory>& runs, bool regularized, double baseline) {
  std::vector<double> finals = vqa::final_costs(runs, regularized, baseline);
  int aborted = 0;
  for (const auto& t : runs)
    if (t.regularized == regularized) aborted += t.record.aborted;
  std::sort(finals.begin(), finals.end());
  Json j;
  j["trajectories"] = finals.size();
  j["final_median"] = quantile(finals, 0.5);
  j["final_max"] = finals.back();
  j["final_min"] = finals.front();
  j["aborted"] = aborted;
  return j;
}

// fixed_n >= 0 takes the register size from elsewhere (the lattice) instead of key "n".
PairedSpec read_paired(ConfigSection& s, int fixed_n, int dtot, int steps, double gamma0, double beta) {
  PairedSpec p;
  p.num_qubits = fixed_n >= 0 ? fixed_n : s.get<int>("n", 9);
  p.total_layers = s.get<int>("dtot", dtot);
  p.random_layers = s.get<int>("random_layers", 6);
  p.trajectories = s.get<int>("trajectories", 20);
  p.master_seed = s.get<std::uint64_t>("master_seed", 20240601);
  ConfigSection r = s.section("regularizer");
  p.gamma0 = r.get<double>("gamma0", gamma0);
  p.beta = r.get<double>("beta", beta);
  r.finish();
  p.optimizer = read_optimizer(s.section("optimizer"), "cg", steps);
  require(p.trajectories >= 1, "trajectories must be >= 1");
  require(p.total_layers >= 1 && p.random_layers >= 0, "dtot must be >= 1 and random_layers >= 0");
  return p;
}

std::vector<int> clip_steps(std::vector<int> steps, int budget) {
  std::erase_if(steps, [&](int s) { return s < 0 || s > budget; });
  return steps;
}

const std::vector<std::string> kTrajectoryColumns = {
    "arm", "trajectory", "seed", "step", "cost", "c_tee", "gamma", "total", "grad_norm"};
const std::vector<std::string> kQuantileColumns = {"arm", "step", "count", "min", "q25",
                                                   "median", "q75", "max"};

// ---------------------------------------------------------------- commands

void cmd_mincut_sweep(ConfigSection& s, ResultBundle& b, const RunOptions& o) {
  const auto ns = s.get<std::vector<int>>("ns", {8, 16, 32, 64, 128, 256, 512});
  const int offset = s.get<int>("offset", 1);
  s.finish();
  for (int n : ns)
    require(is_power_of_two(n) && n % 4 == 0, "mincut-sweep n must be a power of two divisible by 4");
  const auto t0 = Clock::now();
  const auto sweeps = parallel_map<std::vector<int>>(ns.size(), o.threads, [&](std::size_t i) {
    return mincut::hartley_tee_cuts_sweep(ns[i], ns[i] / 2, offset);
  });
  b.wall_seconds["sweep"] = seconds_since(t0);
  CsvWriter csv({"n", "depth", "tee0_cuts", "tee0_nats"});
  Json checks = Json::array();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const int n = ns[i];
    bool plateau = true, saturated = true, monotone = true;
    for (int d = 1; d <= n / 2; ++d) {
      const int c = sweeps[i][d];
      csv.row({cell(n), cell(d), cell(c), cell(c * std::numbers::ln2)});
      if (d <= n / 8 && c != 0) plateau = false;
      if (d >= n / 4 && c != -n / 2) saturated = false;
      if (d > 1 && c > sweeps[i][d - 1]) monotone = false;
    }
    checks.push_back({{"n", n}, {"zero_through_n_over_8", plateau},
                      {"saturated_from_n_over_4", saturated}, {"nonincreasing", monotone}});
  }
  b.add_csv("mincut_tee.csv", csv);
  b.derived["checks"] = checks;
}

void cmd_weierstrass(ConfigSection& s, ResultBundle& b, const RunOptions& o) {
  const auto as = s.get<std::vector<double>>("a_values", {0.25, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.96});
  const double bb = s.get<double>("b", std::sqrt(5.0));
  const auto ns = s.get<std::vector<int>>("ns", {8, 10, 12, 14, 16});
  const int grid_bits = s.get<int>("grid_bits", -1);
  const int terms = s.get<int>("terms", 0);
  const int max_qubits = s.get<int>("max_qubits", 20);
  s.finish();
  for (int n : ns) {
    require(n >= 4, "weierstrass needs n >= 4 (quarter regions)");
    if (n > max_qubits)
      throw SizeLimitExceeded("n = " + std::to_string(n) + " exceeds max_qubits = " + std::to_string(max_qubits));
  }
  struct Cell {
    double a;
    int n;
    int terms;
    double real, fourier;
  };
  const auto t0 = Clock::now();
  const auto cells = parallel_map<Cell>(as.size() * ns.size(), o.threads, [&](std::size_t k) {
    const double a = as[k / ns.size()];
    const int n = ns[k % ns.size()];
    const enc::WeierstrassSamples w = enc::weierstrass_samples({a, bb, terms}, n, grid_bits);
    const StateVector psi = enc::amplitude_encode(w.function);
    const auto vn = EntropyOrder::von_neumann();
    return Cell{a, n, w.terms, tee_contiguous(psi, vn), tee_contiguous(qft(psi), vn)};
  });
  b.wall_seconds["tee"] = seconds_since(t0);
  CsvWriter csv({"a", "b", "n", "hausdorff_dimension", "terms", "tee1_real", "tee1_fourier"});
  for (const auto& c : cells) {
    const double dim = c.a * bb >= 1.0 ? enc::hausdorff_dimension(c.a, bb) : std::nan("");
    csv.row({cell(c.a), cell(bb), cell(c.n), cell(dim), cell(c.terms), cell(c.real), cell(c.fourier)});
  }
  b.add_csv("weierstrass_tee.csv", csv);
}

void cmd_ksparse(ConfigSection& s, ResultBundle& b, const RunOptions& o) {
  const int n = s.get<int>("n", 12);
  const auto ks = s.get<std::vector<std::uint64_t>>("k_values", {1, 2, 4, 8, 16, 32, 64, 128, 256, 512});
  const int samples = s.get<int>("samples", 100);
  const auto master = s.get<std::uint64_t>("master_seed", 20240602);
  s.finish();
  require(n >= 4, "ksparse needs n >= 4");
  require(samples >= 2, "ksparse needs at least two samples");
  for (auto k : ks) require(k >= 1 && k <= (std::uint64_t{1} << n), "K must lie in [1, 2^n]");
  const auto t0 = Clock::now();
  const std::size_t total = ks.size() * samples;
  const auto tees = parallel_map<double>(total, o.threads, [&](std::size_t i) {
    const std::uint64_t k = ks[i / samples];
    const std::uint64_t seed = derive_seed(derive_seed(master, k), i % samples);
    return tee_contiguous(enc::k_sparse_state({n, k, seed}), EntropyOrder::von_neumann());
  });
  b.wall_seconds["samples"] = seconds_since(t0);
  CsvWriter per({"k", "sample", "seed", "tee1"});
  CsvWriter agg({"k", "log2_k", "mean_tee1", "stderr_tee1"});
  std::vector<double> means;
  for (std::size_t j = 0; j < ks.size(); ++j) {
    std::vector<double> v(tees.begin() + j * samples, tees.begin() + (j + 1) * samples);
    for (int i = 0; i < samples; ++i)
      per.row({cell(static_cast<unsigned long long>(ks[j])), cell(i),
               cell(static_cast<unsigned long long>(derive_seed(derive_seed(master, ks[j]), i))), cell(v[i])});
    const MeanStderr ms = mean_stderr(v);
    means.push_back(ms.mean);
    agg.row({cell(static_cast<unsigned long long>(ks[j])), cell(std::log2(static_cast<double>(ks[j]))),
             cell(ms.mean), cell(ms.stderr_)});
  }
  b.add_csv("ksparse_samples.csv", per);
  b.add_csv("ksparse_summary.csv", agg);
  b.derived["predicted_threshold_k"] = std::pow(2.0, n / 3.0);
  for (std::size_t j = 1; j < ks.size(); ++j)
    if (means[j - 1] > 0.0 && means[j] <= 0.0) {
      b.derived["sign_change_bracket"] = {ks[j - 1], ks[j]};
      break;
    }
}

void cmd_qnsst(ConfigSection& s, ResultBundle& b, const RunOptions&) {
  const int n = s.get<int>("n", 16);
  std::vector<enc::SineTone> tones;
  const Json def = Json::array({{{"wavelength", 0.125}}, {{"wavelength", 0.25}}, {{"wavelength", 0.5}}});
  for (auto& t : s.sections("tones", def)) {
    tones.push_back({t.required<double>("wavelength"), t.get<double>("amplitude", 1.0),
                     t.get<double>("phase", 0.0)});
    t.finish();
  }
  s.finish();
  require(!tones.empty(), "qnsst needs at least one tone");
  double lambda_min = tones.front().wavelength;
  for (const auto& t : tones) lambda_min = std::min(lambda_min, t.wavelength);
  const int qc = enc::qnsst_threshold(lambda_min);
  const auto res = enc::qnsst_residual_sweep(enc::sum_of_sines(n, tones));
  CsvWriter csv({"q", "residual", "log2_residual"});
  for (std::size_t j = 0; j < res.size(); ++j)
    csv.row({cell(static_cast<int>(j + 1)), cell(res[j]), cell(std::log2(res[j]))});
  b.add_csv("qnsst_residuals.csv", csv);
  b.derived["lambda_min"] = lambda_min;
  b.derived["threshold_qubits"] = qc;
  b.derived["decay_onset"] = enc::decay_onset(res);
  if (qc + 1 < n - 1) b.derived["log2_slope_beyond_threshold"] = enc::log2_slope(res, qc + 1, n - 1);
}

void cmd_gradvar(ConfigSection& s, ResultBundle& b, const RunOptions& o) {
  const auto ns = s.get<std::vector<int>>("ns", {8, 12});
  const auto depths = s.get<std::vector<int>>("depths", int_range(1, 24));
  const int trials = s.get<int>("trials", 40);
  const auto master = s.get<std::uint64_t>("master_seed", 20240603);
  s.finish();
  const auto t0 = Clock::now();
  const auto tables = parallel_map<std::vector<vqa::GradVarRow>>(ns.size(), o.threads, [&](std::size_t i) {
    return vqa::variance_of_tee_gradient(ns[i], depths, trials, derive_seed(master, ns[i]));
  });
  b.wall_seconds["trials"] = seconds_since(t0);
  CsvWriter csv({"n", "dtot", "trials", "mean", "variance"});
  Json peaks = Json::object();
  for (const auto& t : tables) {
    const vqa::GradVarRow* best = &t.front();
    for (const auto& r : t) {
      csv.row({cell(r.num_qubits), cell(r.total_layers), cell(r.trials), cell(r.mean), cell(r.variance)});
      if (r.variance > best->variance) best = &r;
    }
    peaks[std::to_string(best->num_qubits)] = best->total_layers;
  }
  b.add_csv("gradvar.csv", csv);
  b.derived["peak_dtot"] = peaks;
}

enc::GridFunction read_source(ConfigSection s, int n, Json& derived) {
  const std::string kind = s.get<std::string>("kind", "surrogate");
  if (kind == "surrogate") {
    const auto seed = s.get<std::uint64_t>("seed", 7);
    const double exponent = s.get<double>("exponent", -5.0 / 3.0);
    s.finish();
    return enc::turbulence_surrogate(n, seed, exponent);
  }
  require(kind == "file", "source.kind must be 'surrogate' or 'file'");
  const std::string path = s.required<std::string>("path");
  const std::string fmt = s.get<std::string>("format", "auto");
  enc::ExtractionSpec spec;
  spec.mode = enc::parse_extraction(s.get<std::string>("extraction", "line"));
  spec.stride = s.get<std::uint64_t>("stride", 1);
  spec.offset = s.get<std::uint64_t>("offset", 0);
  s.finish();
  enc::FieldFormat format = enc::FieldFormat::Auto;
  if (fmt == "csv") format = enc::FieldFormat::Csv;
  else if (fmt == "raw_f64") format = enc::FieldFormat::RawF64;
  else require(fmt == "auto", "source.format must be auto, csv or raw_f64");
  const enc::IngestResult r = enc::ingest_scalar_field(path, n, spec, format);
  derived["source_stats"] = {{"min", r.stats.min}, {"max", r.stats.max}, {"l2", r.stats.l2}};
  return r.function;
}

void cmd_encode(ConfigSection& s, ResultBundle& b, const RunOptions& o) {
  PairedSpec p = read_paired(s, -1, 180, 200, 0.1, 0.5);
  const int block = s.get<int>("omega_block", 2);
  const auto qsteps = s.get<std::vector<int>>("quantile_steps", {50, 100, 150, 200});
  const enc::GridFunction target = read_source(s.section("source"), p.num_qubits, b.derived);
  s.finish();
  const vqa::OmegaSet omega = vqa::build_omega_contiguous(p.num_qubits, block);
  const auto t0 = Clock::now();
  const auto runs = vqa::run_paired_trajectories(p, vqa::InfidelityCost{enc::amplitude_encode(target)}, omega, o.threads);
  b.wall_seconds["trajectories"] = seconds_since(t0);
  CsvWriter steps(kTrajectoryColumns);
  for (const auto& t : runs) add_trajectory_rows(steps, t, 0.0);
  CsvWriter q(kQuantileColumns);
  for (bool arm : {true, false}) add_quantile_rows(q, runs, arm, clip_steps(qsteps, p.optimizer.steps), 0.0);
  b.add_csv("encode_steps.csv", steps);
  b.add_csv("encode_quantiles.csv", q);
  b.derived["omega_size"] = omega.size();
  b.derived["regularized"] = arm_summary(runs, true, 0.0);
  b.derived["bare"] = arm_summary(runs, false, 0.0);
}

void cmd_vqe(ConfigSection& s, ResultBundle& b, const RunOptions& o) {
  const int lx = s.get<int>("lx", 3), ly = s.get<int>("ly", 3);
  const double j = s.get<double>("j", 1.0), h = s.get<double>("h", 2.0);
  PairedSpec p = read_paired(s, lx * ly, 180, 360, 100.0, 0.5);
  const auto qsteps = s.get<std::vector<int>>("quantile_steps", {90, 180, 270, 360});
  s.finish();
  const ham::LatticeSpec lattice{lx, ly};
  const ham::Hamiltonian hamiltonian = ham::build_af2dnnh(lattice, j, h);
  const auto t0 = Clock::now();
  const double eg = ham::exact_ground_energy(hamiltonian);
  b.wall_seconds["exact_diagonalization"] = seconds_since(t0);
  const vqa::OmegaSet omega = vqa::build_omega_lshape(lattice);
  const auto t1 = Clock::now();
  const auto runs = vqa::run_paired_trajectories(p, vqa::EnergyCost{hamiltonian}, omega, o.threads);
  b.wall_seconds["trajectories"] = seconds_since(t1);
  CsvWriter steps(kTrajectoryColumns);
  for (const auto& t : runs) add_trajectory_rows(steps, t, eg);
  CsvWriter q(kQuantileColumns);
  for (bool arm : {true, false}) add_quantile_rows(q, runs, arm, clip_steps(qsteps, p.optimizer.steps), eg);
  double min_delta = INFINITY;
  for (const auto& t : runs)
    for (const auto& r : t.record.steps) min_delta = std::min(min_delta, r.cost - eg);
  b.add_csv("vqe_steps.csv", steps);
  b.add_csv("vqe_quantiles.csv", q);
  b.derived["ground_energy"] = eg;
  b.derived["hamiltonian_terms"] = hamiltonian.terms().size();
  b.derived["omega_size"] = omega.size();
  b.derived["min_delta_e"] = min_delta;
  b.derived["regularized"] = arm_summary(runs, true, eg);
  b.derived["bare"] = arm_summary(runs, false, eg);
}

void cmd_scaling(ConfigSection& s, ResultBundle& b, const RunOptions& o) {
  const auto ns = s.get<std::vector<int>>("ns", int_range(2, 8));
  const auto eps = s.get<std::vector<double>>("thresholds", {1e-1, 1e-3});
  const double a = s.get<double>("a", 0.5);
  const double bb = s.get<double>("b", std::sqrt(5.0));
  const int grid_bits = s.get<int>("grid_bits", 16);
  const int max_n = s.get<int>("max_qubits", 10);
  vqa::MinParamsConfig mc;
  mc.max_layers = s.get<int>("max_layers", mc.max_layers);
  mc.random_restarts = s.get<int>("random_restarts", mc.random_restarts);
  mc.seed = s.get<std::uint64_t>("master_seed", 20240604);
  mc.optimizer = read_optimizer(s.section("optimizer"), "cg", mc.optimizer.steps, mc.optimizer.cg.max_expansions);
  s.finish();
  for (int n : ns) {
    require(n >= 2 && n <= grid_bits, "scaling n must lie in [2, grid_bits]");
    if (n > max_n) throw SizeLimitExceeded("scaling n above max_qubits = " + std::to_string(max_n));
  }
  const auto target = [&](int n) { return enc::weierstrass_samples({a, bb, 0}, n, grid_bits).function; };
  const auto t0 = Clock::now();
  const auto tables = parallel_map<std::vector<vqa::MinParamsRow>>(ns.size(), o.threads, [&](std::size_t i) {
    return vqa::min_params_for_infidelity(target, eps, {ns[i]}, mc);
  });
  b.wall_seconds["search"] = seconds_since(t0);
  CsvWriter csv({"n", "threshold", "layers", "parameters", "best_infidelity"});
  for (const auto& t : tables)
    for (const auto& r : t)
      csv.row({cell(r.num_qubits), cell(r.threshold), cell(r.layers), cell(r.parameters), cell(r.best_infidelity)});
  b.add_csv("scaling.csv", csv);
  Json slopes = Json::object();
  for (double e : eps) {
    std::vector<double> x, y;
    for (const auto& t : tables)
      for (const auto& r : t)
        if (r.threshold == e && r.parameters > 0) {
          x.push_back(std::log(r.num_qubits));
          y.push_back(std::log(r.parameters));
        }
    if (x.size() >= 2) slopes[format_number(e)] = least_squares_slope(x, y);
  }
  b.derived["loglog_slope"] = slopes;
}

void cmd_selftest(ConfigSection& s, ResultBundle& b, const RunOptions& o) {
  const auto ids = s.get<std::vector<int>>("criteria", verify::deterministic_criteria());
  s.finish();
  verify::VerifyOptions vo;
  vo.threads = o.threads;
  CsvWriter csv({"criterion", "name", "status", "detail"});
  int failed = 0;
  Json secs = Json::object();
  for (int id : ids) {
    const verify::CriterionResult r = verify::run_criterion(id, vo);
    csv.row({cell(r.id), cell(r.name), cell(r.pass ? "PASS" : "FAIL"), cell(r.detail)});
    secs[std::to_string(id)] = r.seconds;
    failed += !r.pass;
    if (!o.quiet) std::printf("%s\n", verify::format_line(r).c_str());
  }
  b.add_csv("selftest.csv", csv);
  b.wall_seconds["criteria"] = secs;
  b.derived["failed"] = failed;
}

using Handler = void (*)(ConfigSection&, ResultBundle&, const RunOptions&);

struct CommandInfo {
  const char* name;
  const char* summary;
  Handler fn;
};

const std::vector<CommandInfo>& registry() {
  static const std::vector<CommandInfo> r = {
      {"mincut-sweep", "zeroth-Renyi TEE of brickwork circuits from min cuts, D = 1..n/2", cmd_mincut_sweep},
      {"weierstrass", "von Neumann TEE of amplitude-encoded Weierstrass functions, real and Fourier space", cmd_weierstrass},
      {"ksparse", "TEE of random K-sparse states versus K", cmd_ksparse},
      {"qnsst", "residual of coarse-grained encodings of a band-limited signal versus q", cmd_qnsst},
      {"gradvar", "variance of the TEE gradient over random circuits versus depth", cmd_gradvar},
      {"encode", "paired regularized / bare variational encoding of a scalar field", cmd_encode},
      {"vqe", "paired regularized / bare ground-state search for the 2D Heisenberg model", cmd_vqe},
      {"scaling", "minimum parameter count to encode a Weierstrass function below thresholds", cmd_scaling},
      {"selftest", "deterministic built-in checks, one PASS/FAIL line each", cmd_selftest},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& c : registry()) v.push_back(c.name);
    return v;
  }();
  return names;
}

std::string command_summary(const std::string& command) {
  for (const auto& c : registry())
    if (command == c.name) return c.summary;
  return "";
}

ResultBundle run_command(const std::string& command, const Json& config, const RunOptions& options) {
  const CommandInfo* info = nullptr;
  for (const auto& c : registry())
    if (command == c.name) info = &c;
  if (!info) throw InvalidArgument("unknown command '" + command + "'");

  Json source = config;
  if (!options.data_path.empty()) {
    if (command != "encode") throw InvalidArgument("--data is only used by the encode command");
    Json src = source.contains("source") ? source["source"] : Json::object();
    src["kind"] = "file";
    src["path"] = options.data_path;
    src.erase("seed");
    src.erase("exponent");
    source["source"] = src;
  }

  ResultBundle b;
  b.command = command;
  b.config = Json::object();
  ConfigSection root(source, b.config, "");
  const std::string experiment = root.get<std::string>("experiment", command);
  if (experiment != command)
    throw ParseError("config is for experiment '" + experiment + "', not '" + command + "'");
  const std::string out_cfg = root.get<std::string>("output_dir", "qsparse_out");
  b.out_dir = options.out_dir.empty() ? std::filesystem::path(out_cfg) : options.out_dir;
  std::filesystem::create_directories(b.out_dir);

  const auto t0 = Clock::now();
  info->fn(root, b, options);
  b.wall_seconds["total"] = seconds_since(t0);
  b.write_manifest(options.threads);
  return b;
}

int bundle_status(const ResultBundle& bundle) {
  if (bundle.command == "selftest" && bundle.derived.value("failed", 0) > 0) return 1;
  return 0;
}

}  // namespace qsparse::cli
