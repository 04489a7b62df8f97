#include "qsparse/vqa/gradients.hpp"

#include <cmath>
#include <numbers>

#include "qsparse/core/density.hpp"
#include "qsparse/core/errors.hpp"

namespace qsparse::vqa {

namespace {

constexpr double kShift = std::numbers::pi / 2.0;

Eigen::MatrixXcd rho_of(const StateVector& psi, std::uint64_t mask) {
  const Eigen::MatrixXcd m = region_matrix(psi, mask);
  return m * m.adjoint();
}

// -Tr((rho+ - rho-) rho) / Tr rho^2 for one region mask.
double s2_shift(const StateVector& psi, const StateVector& plus, const StateVector& minus,
                std::uint64_t mask) {
  const Eigen::MatrixXcd rho = rho_of(psi, mask);
  const double p = rho.squaredNorm();
  if (p < 1e-14) throw InvalidState("purity below 1e-14 in parameter-shift gradient");
  const Eigen::MatrixXcd diff = rho_of(plus, mask) - rho_of(minus, mask);
  return -(diff.cwiseProduct(rho.conjugate())).sum().real() / p;
}

}  // namespace

std::vector<double> shifted(std::span<const double> theta, std::size_t j, double delta) {
  std::vector<double> t(theta.begin(), theta.end());
  t.at(j) += delta;
  return t;
}

std::vector<double> grad_cost_parameter_shift(const BrickworkAnsatz& ansatz,
                                              std::span<const double> theta,
                                              const StateVector& psi0, const CostSpec& spec) {
  validate_cost(spec, ansatz.num_qubits());
  std::vector<double> g(theta.size(), 0.0);
  if (std::holds_alternative<TeeOnlyCost>(spec)) return g;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const double up = bare_cost(apply_ansatz(ansatz, shifted(theta, j, kShift), psi0), spec);
    const double dn = bare_cost(apply_ansatz(ansatz, shifted(theta, j, -kShift), psi0), spec);
    g[j] = 0.5 * (up - dn);
  }
  return g;
}

double grad_s2_parameter_shift(const BrickworkAnsatz& ansatz, std::span<const double> theta,
                               const StateVector& psi0, const Region& region, std::size_t j) {
  region.validate(ansatz.num_qubits());
  require(j < ansatz.num_parameters(), "parameter index out of range");
  const StateVector psi = apply_ansatz(ansatz, theta, psi0);
  const StateVector plus = apply_ansatz(ansatz, shifted(theta, j, kShift), psi0);
  const StateVector minus = apply_ansatz(ansatz, shifted(theta, j, -kShift), psi0);
  return s2_shift(psi, plus, minus, region.mask());
}

std::vector<double> tee2_shift_from_states(const StateVector& psi, const StateVector& plus,
                                           const StateVector& minus, const OmegaSet& omega) {
  const EntropyCombination comb = entropy_combination(omega);
  std::vector<double> ds(comb.masks.size());
  for (std::size_t k = 0; k < ds.size(); ++k) ds[k] = s2_shift(psi, plus, minus, comb.masks[k]);
  std::vector<double> out;
  for (const auto& terms : comb.triplet_terms) {
    double v = 0.0;
    for (const auto& [k, sg] : terms) v += sg * ds[k];
    out.push_back(v);
  }
  return out;
}

std::vector<double> grad_tee2_parameter_shift(const BrickworkAnsatz& ansatz,
                                              std::span<const double> theta,
                                              const StateVector& psi0, const OmegaSet& omega,
                                              std::size_t j) {
  omega.validate(ansatz.num_qubits());
  require(j < ansatz.num_parameters(), "parameter index out of range");
  const StateVector psi = apply_ansatz(ansatz, theta, psi0);
  const StateVector plus = apply_ansatz(ansatz, shifted(theta, j, kShift), psi0);
  const StateVector minus = apply_ansatz(ansatz, shifted(theta, j, -kShift), psi0);
  return tee2_shift_from_states(psi, plus, minus, omega);
}

std::vector<double> grad_c_tee_parameter_shift(const BrickworkAnsatz& ansatz,
                                               std::span<const double> theta,
                                               const StateVector& psi0, const OmegaSet& omega) {
  const std::vector<double> tees = tee2_values(apply_ansatz(ansatz, theta, psi0), omega);
  const double inv = 1.0 / static_cast<double>(omega.size());
  std::vector<double> g(theta.size(), 0.0);
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const std::vector<double> d = grad_tee2_parameter_shift(ansatz, theta, psi0, omega, j);
    for (std::size_t t = 0; t < d.size(); ++t) {
      const double sg = tees[t] > 0.0 ? 1.0 : (tees[t] < 0.0 ? -1.0 : 0.0);
      g[j] += inv * sg * d[t];
    }
  }
  return g;
}

}  // namespace qsparse::vqa
