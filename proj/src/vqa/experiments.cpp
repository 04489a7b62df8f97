#include "qsparse/vqa/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsparse/core/errors.hpp"
#include "qsparse/core/parallel.hpp"
#include "qsparse/core/random.hpp"
#include "qsparse/vqa/gradients.hpp"

namespace qsparse::vqa {

std::vector<double> head_random_parameters(const BrickworkAnsatz& ansatz, int random_layers,
                                           Rng& rng) {
  require(random_layers >= 0, "random layer count must be >= 0");
  std::vector<double> theta(ansatz.num_parameters(), 0.0);
  const int d = std::min(random_layers, ansatz.total_layers());
  const std::size_t head = static_cast<std::size_t>(d) * ansatz.num_qubits();
  for (std::size_t j = 0; j < head; ++j) theta[j] = uniform_angle(rng);
  return theta;
}

TrajectoryStart trajectory_start(int num_qubits, int total_layers, int random_layers,
                                 std::uint64_t seed) {
  Rng rng(seed);
  BrickworkAnsatz ansatz = BrickworkAnsatz::with_random_axes(num_qubits, total_layers, rng);
  std::vector<double> theta = head_random_parameters(ansatz, random_layers, rng);
  return {std::move(ansatz), std::move(theta)};
}

std::vector<Trajectory> run_paired_trajectories(const PairedSpec& spec, const CostSpec& cost,
                                                const OmegaSet& omega, int threads) {
  require(spec.trajectories >= 1, "trajectory count must be >= 1");
  const StateVector psi0 = fourth_root_y_state(spec.num_qubits);
  const std::size_t count = static_cast<std::size_t>(spec.trajectories) * 2;
  return parallel_map<Trajectory>(count, threads, [&](std::size_t k) {
    const int index = static_cast<int>(k / 2);
    const bool regularized = k % 2 == 0;
    const std::uint64_t seed = derive_seed(spec.master_seed, static_cast<std::uint64_t>(index));
    TrajectoryStart st = trajectory_start(spec.num_qubits, spec.total_layers, spec.random_layers, seed);
    VariationalProblem problem(std::move(st.ansatz), psi0, cost,
                               RegularizerConfig{omega, regularized ? spec.gamma0 : 0.0, spec.beta});
    return Trajectory{regularized, index, seed,
                      optimize(problem, std::move(st.theta0), spec.optimizer, seed)};
  });
}

std::vector<double> final_costs(const std::vector<Trajectory>& runs, bool regularized,
                                double baseline) {
  std::vector<double> out;
  for (const auto& t : runs)
    if (t.regularized == regularized) out.push_back(t.record.steps.back().cost - baseline);
  return out;
}

std::vector<GradVarRow> variance_of_tee_gradient(int num_qubits, std::vector<int> depths,
                                                 int trials, std::uint64_t seed,
                                                 const OmegaSet& omega) {
  require(trials >= 2, "gradient variance needs at least two trials");
  require(!depths.empty(), "depth list is empty");
  std::sort(depths.begin(), depths.end());
  depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
  require(depths.front() >= 1, "depths must be >= 1");
  omega.validate(num_qubits);
  const OmegaSet first({omega.triplets().front()});
  const int dmax = depths.back();
  const std::size_t j = static_cast<std::size_t>(num_qubits / 8);

  std::vector<std::vector<double>> samples(depths.size());
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const BrickworkAnsatz ansatz = BrickworkAnsatz::with_random_axes(num_qubits, dmax, rng);
    std::vector<double> theta(ansatz.num_parameters());
    for (double& x : theta) x = uniform_angle(rng);
    const std::vector<double> tp = shifted(theta, j, std::numbers::pi / 2);
    const std::vector<double> tm = shifted(theta, j, -std::numbers::pi / 2);
    StateVector psi = fourth_root_y_state(num_qubits);
    StateVector plus = psi, minus = psi;
    int done = 0;
    for (std::size_t k = 0; k < depths.size(); ++k) {
      const std::size_t a = ansatz.layer_begin(done + 1), b = ansatz.layer_begin(depths[k] + 1);
      apply_ops(ansatz, theta, a, b, psi);
      apply_ops(ansatz, tp, a, b, plus);
      apply_ops(ansatz, tm, a, b, minus);
      done = depths[k];
      samples[k].push_back(tee2_shift_from_states(psi, plus, minus, first).front());
    }
  }
  std::vector<GradVarRow> rows;
  for (std::size_t k = 0; k < depths.size(); ++k) {
    const auto& s = samples[k];
    double mean = 0.0;
    for (double x : s) mean += x;
    mean /= s.size();
    double var = 0.0;
    for (double x : s) var += (x - mean) * (x - mean);
    var /= (s.size() - 1);
    rows.push_back({num_qubits, depths[k], trials, mean, var});
  }
  return rows;
}

std::vector<GradVarRow> variance_of_tee_gradient(int num_qubits, std::vector<int> depths,
                                                 int trials, std::uint64_t seed) {
  return variance_of_tee_gradient(num_qubits, std::move(depths), trials, seed,
                                  quarters_omega(num_qubits));
}

namespace {

struct Fit {
  double infidelity;
  std::vector<double> theta;
};

Fit fit_layers(const StateVector& reference, int layers, const std::vector<std::vector<double>>& starts,
               const OptimizerConfig& opt) {
  const int n = reference.num_qubits();
  VariationalProblem problem(BrickworkAnsatz::with_uniform_axis(n, layers, Axis::Y),
                             StateVector(n), InfidelityCost{reference}, RegularizerConfig{});
  Fit best{2.0, {}};
  for (const auto& s : starts) {
    RunRecord rec = optimize(problem, s, opt, 0);
    const double f = problem.evaluate(rec.final_theta, 0, false).cost;
    if (f < best.infidelity) best = {f, std::move(rec.final_theta)};
  }
  return best;
}

}  // namespace

std::vector<MinParamsRow> min_params_for_infidelity(
    const std::function<enc::GridFunction(int)>& target, const std::vector<double>& thresholds,
    const std::vector<int>& qubit_counts, const MinParamsConfig& config) {
  require(!thresholds.empty(), "threshold list is empty");
  require(config.max_layers >= 1 && config.random_restarts >= 0, "invalid search budget");
  const double tightest = *std::min_element(thresholds.begin(), thresholds.end());
  std::vector<MinParamsRow> rows;
  for (int n : qubit_counts) {
    require(n >= 2, "scaling sweep needs n >= 2");
    const StateVector reference = enc::amplitude_encode(target(n));
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(n)));
    std::vector<Fit> fits;
    double overall_best = 2.0;
    std::vector<int> first_hit(thresholds.size(), -1);
    for (int d = 1; d <= config.max_layers; ++d) {
      const std::size_t np = static_cast<std::size_t>(n) * d;
      std::vector<std::vector<double>> starts;
      if (d >= 3) {
        std::vector<double> s(2 * n, 0.0);
        const auto& prev = fits[d - 3].theta;
        s.insert(s.end(), prev.begin(), prev.end());
        starts.push_back(std::move(s));
      }
      {
        // y rotations by pi/2 on layer 1 give |+>^n; the CNOTs leave it alone
        std::vector<double> s(np, 0.0);
        std::fill(s.begin(), s.begin() + n, std::numbers::pi / 2);
        starts.push_back(std::move(s));
      }
      if (d >= 2) {
        std::vector<double> s = fits[d - 2].theta;
        s.resize(np, 0.0);
        starts.push_back(std::move(s));
      }
      for (int r = 0; r < config.random_restarts; ++r) {
        std::vector<double> s(np);
        for (double& x : s) x = uniform_angle(rng);
        starts.push_back(std::move(s));
      }
      fits.push_back(fit_layers(reference, d, starts, config.optimizer));
      overall_best = std::min(overall_best, fits.back().infidelity);
      for (std::size_t k = 0; k < thresholds.size(); ++k)
        if (first_hit[k] < 0 && fits.back().infidelity <= thresholds[k]) first_hit[k] = d;
      if (fits.back().infidelity <= tightest) break;
    }
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
      const int d = first_hit[k];
      rows.push_back({n, thresholds[k], d, d < 0 ? -1 : n * d,
                      d < 0 ? overall_best : fits[d - 1].infidelity});
    }
  }
  return rows;
}

}  // namespace qsparse::vqa
