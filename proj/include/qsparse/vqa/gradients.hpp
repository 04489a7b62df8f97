#pragma once

#include <span>
#include <vector>

#include "qsparse/vqa/cost.hpp"

namespace qsparse::vqa {

/// theta with theta_j shifted by `delta`.
std::vector<double> shifted(std::span<const double> theta, std::size_t j, double delta);

/// (C(theta_j + pi/2) - C(theta_j - pi/2)) / 2 for every j. Infidelity and
/// energy are both expectation values, so the rule is exact; tee_only gives 0.
std::vector<double> grad_cost_parameter_shift(const BrickworkAnsatz& ansatz,
                                              std::span<const double> theta,
                                              const StateVector& psi0, const CostSpec& spec);

/// dS2_A/dtheta_j = -Tr((rho+ - rho-) rho) / Tr rho^2 from three circuit runs.
double grad_s2_parameter_shift(const BrickworkAnsatz& ansatz, std::span<const double> theta,
                               const StateVector& psi0, const Region& region, std::size_t j);

/// Per-triplet shift-rule derivative from the states at theta, theta_j + pi/2
/// and theta_j - pi/2.
std::vector<double> tee2_shift_from_states(const StateVector& psi, const StateVector& plus,
                                           const StateVector& minus, const OmegaSet& omega);

/// Per-triplet dTEE^(2)/dtheta_j assembled from the S2 shift rule.
std::vector<double> grad_tee2_parameter_shift(const BrickworkAnsatz& ansatz,
                                              std::span<const double> theta,
                                              const StateVector& psi0, const OmegaSet& omega,
                                              std::size_t j);

/// Subgradient of C_TEE, one shift pair per parameter.
std::vector<double> grad_c_tee_parameter_shift(const BrickworkAnsatz& ansatz,
                                               std::span<const double> theta,
                                               const StateVector& psi0, const OmegaSet& omega);

/// Central difference (f(theta + h e_j) - f(theta - h e_j)) / 2h for every j.
template <class F>
std::vector<double> central_difference(F&& f, std::span<const double> theta, double h = 1e-5) {
  std::vector<double> g(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j)
    g[j] = (f(shifted(theta, j, h)) - f(shifted(theta, j, -h))) / (2.0 * h);
  return g;
}

}  // namespace qsparse::vqa
