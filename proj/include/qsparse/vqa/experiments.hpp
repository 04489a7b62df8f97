#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qsparse/enc/grid_function.hpp"
#include "qsparse/vqa/optimizer.hpp"

namespace qsparse::vqa {

/// Layers 1..random_layers uniform on [0, 2pi), all later layers 0.
std::vector<double> head_random_parameters(const BrickworkAnsatz& ansatz, int random_layers,
                                           Rng& rng);

/// Random axes and head-random angles drawn from one trajectory seed, so two
/// arms sharing the seed start from the same circuit.
struct TrajectoryStart {
  BrickworkAnsatz ansatz;
  std::vector<double> theta0;
};
TrajectoryStart trajectory_start(int num_qubits, int total_layers, int random_layers,
                                 std::uint64_t seed);

/// Paired-arm benchmark: every trajectory index runs once with gamma0 and once
/// with gamma0 = 0, both from trajectory_start(derive_seed(master_seed, index)).
struct PairedSpec {
  int num_qubits;
  int total_layers;
  int random_layers = 6;
  int trajectories = 20;
  std::uint64_t master_seed = 1;
  double gamma0;
  double beta = 0.5;
  OptimizerConfig optimizer;
};

struct Trajectory {
  bool regularized;
  int index;
  std::uint64_t seed;
  RunRecord record;
};

/// Runs 2 * trajectories optimizations from |Y^(1/4)>^n on up to `threads`
/// workers; the result order is (index 0 regularized, index 0 bare, index 1 ...).
std::vector<Trajectory> run_paired_trajectories(const PairedSpec& spec, const CostSpec& cost,
                                                const OmegaSet& omega, int threads);

/// Final cost - baseline of one arm, in trajectory order.
std::vector<double> final_costs(const std::vector<Trajectory>& runs, bool regularized,
                                double baseline = 0.0);

struct GradVarRow {
  int num_qubits;
  int total_layers;
  int trials;
  double mean;
  double variance;  ///< unbiased sample variance
};

/// Variance over random circuits of dTEE^(2)/dtheta at layer 1, qubit
/// floor(n/8), on the first triplet of `omega`. Trial t uses derive_seed(seed, t);
/// every depth of one trial is a prefix of the same random circuit.
std::vector<GradVarRow> variance_of_tee_gradient(int num_qubits, std::vector<int> depths,
                                                 int trials, std::uint64_t seed,
                                                 const OmegaSet& omega);
std::vector<GradVarRow> variance_of_tee_gradient(int num_qubits, std::vector<int> depths,
                                                 int trials, std::uint64_t seed);

struct MinParamsConfig {
  int max_layers = 40;
  int random_restarts = 10;
  OptimizerConfig optimizer = [] {
    OptimizerConfig c;
    c.steps = 1000;
    return c;
  }();
  std::uint64_t seed = 1;
};

struct MinParamsRow {
  int num_qubits;
  double threshold;
  int layers;      ///< -1 when the budget ran out
  int parameters;  ///< n * layers, -1 when the budget ran out
  double best_infidelity;  ///< at `layers`, or the best seen when unreached
};

/// Grows the circuit one layer at a time until every threshold is met. Each
/// depth keeps the best of: the depth-2 optimum behind two zero layers (same
/// state), the depth-1 optimum with a zero layer appended, the |+>^n start and
/// random restarts.
std::vector<MinParamsRow> min_params_for_infidelity(
    const std::function<enc::GridFunction(int)>& target, const std::vector<double>& thresholds,
    const std::vector<int>& qubit_counts, const MinParamsConfig& config);

}  // namespace qsparse::vqa
