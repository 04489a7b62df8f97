#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qsparse/vqa/cost.hpp"

namespace qsparse::vqa {

struct AdamWConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double weight_decay = 0.01;
};

/// Polak-Ribiere+ with backtracking Armijo line search. An accepted step is
/// refined once by quadratic interpolation of the line values.
struct CgConfig {
  double armijo_c = 1e-4;
  double shrink = 0.5;
  int max_backtracks = 40;
  /// First trial step is initial_step / max|d_i|; later trials rescale the
  /// previous accepted step by the ratio of directional derivatives.
  double initial_step = 0.1;
  /// When the first trial already satisfies Armijo, keep doubling the step
  /// while the value keeps dropping, at most this many times.
  int max_expansions = 0;
  /// Steepest-descent restart every this many iterations (0 = never).
  int restart_every = 0;
};

struct OptimizerConfig {
  enum class Kind { AdamW, Cg } kind = Kind::Cg;
  int steps = 200;
  AdamWConfig adamw;
  CgConfig cg;
  /// Stop early once the gradient norm falls below this (0 = never).
  double gradient_tolerance = 0.0;

  void validate() const;
};

const char* optimizer_name(OptimizerConfig::Kind kind);
OptimizerConfig::Kind parse_optimizer(const std::string& name);

struct StepRecord {
  int step;
  double cost;
  double c_tee;
  double gamma;
  double total;
  double gradient_norm;
  double monitor;  ///< optional per-step observable, NaN when unused
};

struct RunRecord {
  std::vector<StepRecord> steps;  ///< rows s = 0..budget, each at the iterate before step s
  std::vector<double> final_theta;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  long evaluations = 0;
  bool converged_early = false;
  bool aborted = false;
  std::string diagnostic;
};

/// Objective at optimizer step s; fills the gradient when asked.
using Objective = std::function<Evaluation(std::span<const double> theta, int step, bool with_gradient)>;
using Monitor = std::function<double(std::span<const double> theta)>;

RunRecord optimize(const Objective& objective, std::vector<double> theta0,
                   const OptimizerConfig& config, const Monitor& monitor = {});

/// Same, over a variational problem.
RunRecord optimize(const VariationalProblem& problem, std::vector<double> theta0,
                   const OptimizerConfig& config, std::uint64_t seed, const Monitor& monitor = {});

}  // namespace qsparse::vqa
