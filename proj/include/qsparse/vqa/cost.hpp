#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qsparse/core/ansatz.hpp"
#include "qsparse/ham/hamiltonian.hpp"
#include "qsparse/vqa/omega.hpp"

namespace qsparse::vqa {

/// Signed sum over region masks: TEE = sum_k weight_k * S2(mask_k).
struct EntropyCombination {
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<std::pair<std::size_t, int>>> triplet_terms;  ///< (mask slot, sign)
};

/// The seven regions of every triplet, each distinct mask stored once.
EntropyCombination entropy_combination(const OmegaSet& omega);

/// Per-triplet TEE^(2) values.
std::vector<double> tee2_values(const StateVector& psi, const OmegaSet& omega);

/// (1/|Omega|) sum |TEE^(2)(A,B,C)|.
double c_tee(const StateVector& psi, const OmegaSet& omega);

struct ValueAndCovector {
  double value;
  StateVector covector;  ///< df/d<psi|
};

/// c_tee with the covector of its subgradient (sign(0) = 0).
ValueAndCovector c_tee_with_covector(const StateVector& psi, const OmegaSet& omega);

/// Mean I^(2)(i : i+1) over the periodic nearest-neighbour pairs.
double mean_nn_mutual_information(const StateVector& psi);

struct InfidelityCost {
  StateVector reference;
};
struct EnergyCost {
  ham::Hamiltonian hamiltonian;
};
struct TeeOnlyCost {};

/// Bare cost C(theta) evaluated on the output state.
using CostSpec = std::variant<InfidelityCost, EnergyCost, TeeOnlyCost>;

/// Checks normalization / register size against n.
void validate_cost(const CostSpec& spec, int num_qubits);

double bare_cost(const StateVector& psi, const CostSpec& spec);
ValueAndCovector bare_cost_with_covector(const StateVector& psi, const CostSpec& spec);

struct RegularizerConfig {
  std::optional<OmegaSet> omega;  ///< required when gamma0 > 0
  double gamma0 = 0.0;
  double beta = 1.0;

  void validate() const;
  /// gamma0 * beta^step
  double gamma(int step) const;
};

struct Evaluation {
  double cost = 0.0;
  double c_tee = 0.0;  ///< 0 when the regularizer has no triplet set
  double gamma = 0.0;
  double total = 0.0;  ///< cost + gamma * c_tee
  std::vector<double> gradient;  ///< empty unless requested
};

/// Ansatz, initial state, bare cost and regularizer bundled into C_reg(theta).
class VariationalProblem {
 public:
  VariationalProblem(BrickworkAnsatz ansatz, StateVector psi0, CostSpec spec,
                     RegularizerConfig reg);

  const BrickworkAnsatz& ansatz() const { return ansatz_; }
  const StateVector& initial_state() const { return psi0_; }
  const CostSpec& cost_spec() const { return spec_; }
  const RegularizerConfig& regularizer() const { return reg_; }
  std::size_t num_parameters() const { return ansatz_.num_parameters(); }

  StateVector state(std::span<const double> theta) const;
  /// Cost terms at optimizer step `step`; the gradient (adjoint sweep) is of
  /// the total and only filled when requested.
  Evaluation evaluate(std::span<const double> theta, int step, bool with_gradient) const;

 private:
  BrickworkAnsatz ansatz_;
  StateVector psi0_;
  CostSpec spec_;
  RegularizerConfig reg_;
};

/// C(theta) + gamma0 beta^s C_TEE(theta).
double regularized_cost(const VariationalProblem& problem, std::span<const double> theta, int step);

}  // namespace qsparse::vqa
