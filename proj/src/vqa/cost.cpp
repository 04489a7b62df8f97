#include "qsparse/vqa/cost.hpp"

#include <bit>
#include <cmath>
#include <map>

#include "qsparse/core/density.hpp"
#include "qsparse/core/errors.hpp"

namespace qsparse::vqa {

namespace {

StateVector zero_state(int n) {
  return StateVector::from_amplitudes(std::vector<Complex>(std::size_t{1} << n), false);
}

// Smaller side of the cut; S2 and its covector are the same on both sides.
std::uint64_t smaller_side(std::uint64_t mask, int n) {
  const int k = std::popcount(mask);
  return 2 * k > n ? (full_mask(n) & ~mask) : mask;
}

// Adds weight * dS2/d<psi| = -(2 weight / P) (rho (x) 1) psi to `out`, returns S2.
double add_s2_covector(const StateVector& psi, std::uint64_t mask, double weight,
                       StateVector& out) {
  const int n = psi.num_qubits();
  const std::uint64_t side = smaller_side(mask, n);
  const Eigen::MatrixXcd m = region_matrix(psi, side);
  const Eigen::MatrixXcd rho = m * m.adjoint();
  const double p = rho.squaredNorm();
  if (p < 1e-14) throw InvalidState("purity below 1e-14 in TEE gradient");
  if (weight != 0.0) {
    const Eigen::MatrixXcd rm = (-2.0 * weight / p) * (rho * m);
    StateVector tmp = zero_state(n);
    scatter_region_matrix(rm, side, tmp);
    auto dst = out.amplitudes();
    const auto src = tmp.amplitudes();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  }
  return -std::log(p);
}

double s2(const StateVector& psi, std::uint64_t mask) {
  const double p = purity(psi, mask);
  if (p < 1e-14) throw InvalidState("purity below 1e-14");
  return -std::log(p);
}

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

EntropyCombination entropy_combination(const OmegaSet& omega) {
  EntropyCombination comb;
  std::map<std::uint64_t, std::size_t> slot;
  auto slot_of = [&](std::uint64_t m) {
    auto [it, inserted] = slot.emplace(m, comb.masks.size());
    if (inserted) comb.masks.push_back(m);
    return it->second;
  };
  for (const auto& t : omega.triplets()) {
    const std::uint64_t a = t.a.mask(), b = t.b.mask(), c = t.c.mask();
    comb.triplet_terms.push_back({{slot_of(a), 1},
                                  {slot_of(b), 1},
                                  {slot_of(c), 1},
                                  {slot_of(a | b), -1},
                                  {slot_of(a | c), -1},
                                  {slot_of(b | c), -1},
                                  {slot_of(a | b | c), 1}});
  }
  return comb;
}

std::vector<double> tee2_values(const StateVector& psi, const OmegaSet& omega) {
  omega.validate(psi.num_qubits());
  const EntropyCombination comb = entropy_combination(omega);
  std::vector<double> s(comb.masks.size());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = s2(psi, comb.masks[k]);
  std::vector<double> out;
  out.reserve(comb.triplet_terms.size());
  for (const auto& terms : comb.triplet_terms) {
    double v = 0.0;
    for (const auto& [k, sg] : terms) v += sg * s[k];
    out.push_back(v);
  }
  return out;
}

double c_tee(const StateVector& psi, const OmegaSet& omega) {
  double sum = 0.0;
  for (double v : tee2_values(psi, omega)) sum += std::abs(v);
  return sum / static_cast<double>(omega.size());
}

ValueAndCovector c_tee_with_covector(const StateVector& psi, const OmegaSet& omega) {
  const std::vector<double> tees = tee2_values(psi, omega);
  const EntropyCombination comb = entropy_combination(omega);
  const double inv = 1.0 / static_cast<double>(omega.size());
  std::vector<double> weight(comb.masks.size(), 0.0);
  double value = 0.0;
  for (std::size_t t = 0; t < tees.size(); ++t) {
    value += std::abs(tees[t]);
    const double sg = sign_of(tees[t]);
    for (const auto& [k, s] : comb.triplet_terms[t]) weight[k] += inv * sg * s;
  }
  StateVector cov = zero_state(psi.num_qubits());
  for (std::size_t k = 0; k < comb.masks.size(); ++k)
    if (weight[k] != 0.0) add_s2_covector(psi, comb.masks[k], weight[k], cov);
  return {value * inv, std::move(cov)};
}

double mean_nn_mutual_information(const StateVector& psi) {
  const int n = psi.num_qubits();
  require(n >= 2, "mutual information needs two qubits");
  const int pairs = n == 2 ? 1 : n;
  double sum = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const int j = (i + 1) % n;
    const std::uint64_t a = std::uint64_t{1} << i, b = std::uint64_t{1} << j;
    sum += s2(psi, a) + s2(psi, b) - s2(psi, a | b);
  }
  return sum / pairs;
}

void validate_cost(const CostSpec& spec, int num_qubits) {
  if (const auto* inf = std::get_if<InfidelityCost>(&spec)) {
    require(inf->reference.num_qubits() == num_qubits, "reference state has wrong qubit count");
    require(std::abs(inf->reference.norm() - 1.0) < 1e-9, "reference state is not normalized");
  } else if (const auto* en = std::get_if<EnergyCost>(&spec)) {
    require(en->hamiltonian.num_qubits() == num_qubits, "Hamiltonian has wrong qubit count");
  }
}

double bare_cost(const StateVector& psi, const CostSpec& spec) {
  if (const auto* inf = std::get_if<InfidelityCost>(&spec))
    return 1.0 - std::norm(inf->reference.inner(psi));
  if (const auto* en = std::get_if<EnergyCost>(&spec)) return ham::expectation(psi, en->hamiltonian);
  return 0.0;
}

ValueAndCovector bare_cost_with_covector(const StateVector& psi, const CostSpec& spec) {
  if (const auto* inf = std::get_if<InfidelityCost>(&spec)) {
    const Complex ov = inf->reference.inner(psi);
    StateVector cov = inf->reference;
    for (auto& x : cov.amplitudes()) x *= -ov;
    return {1.0 - std::norm(ov), std::move(cov)};
  }
  if (const auto* en = std::get_if<EnergyCost>(&spec)) {
    StateVector hpsi = ham::apply_hamiltonian(en->hamiltonian, psi);
    const double e = psi.inner(hpsi).real();
    return {e, std::move(hpsi)};
  }
  return {0.0, zero_state(psi.num_qubits())};
}

void RegularizerConfig::validate() const {
  require(gamma0 >= 0.0 && std::isfinite(gamma0), "gamma0 must be finite and >= 0");
  require(beta > 0.0 && beta <= 1.0, "beta must lie in (0, 1]");
  require(gamma0 == 0.0 || omega.has_value(), "a nonzero gamma0 needs a triplet set");
}

double RegularizerConfig::gamma(int step) const { return gamma0 * std::pow(beta, step); }

VariationalProblem::VariationalProblem(BrickworkAnsatz ansatz, StateVector psi0, CostSpec spec,
                                       RegularizerConfig reg)
    : ansatz_(std::move(ansatz)), psi0_(std::move(psi0)), spec_(std::move(spec)), reg_(std::move(reg)) {
  const int n = ansatz_.num_qubits();
  require(psi0_.num_qubits() == n, "initial state has wrong qubit count");
  validate_cost(spec_, n);
  reg_.validate();
  if (reg_.omega) reg_.omega->validate(n);
}

StateVector VariationalProblem::state(std::span<const double> theta) const {
  return apply_ansatz(ansatz_, theta, psi0_);
}

Evaluation VariationalProblem::evaluate(std::span<const double> theta, int step,
                                        bool with_gradient) const {
  const StateVector psi = state(theta);
  Evaluation ev;
  ev.gamma = reg_.gamma(step);
  if (!with_gradient) {
    ev.cost = bare_cost(psi, spec_);
    ev.c_tee = reg_.omega ? c_tee(psi, *reg_.omega) : 0.0;
    ev.total = ev.cost + ev.gamma * ev.c_tee;
    return ev;
  }
  ValueAndCovector bare = bare_cost_with_covector(psi, spec_);
  ev.cost = bare.value;
  StateVector cov = std::move(bare.covector);
  if (ev.gamma > 0.0) {
    ValueAndCovector reg = c_tee_with_covector(psi, *reg_.omega);
    ev.c_tee = reg.value;
    auto dst = cov.amplitudes();
    const auto src = reg.covector.amplitudes();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += ev.gamma * src[i];
  } else if (reg_.omega) {
    ev.c_tee = c_tee(psi, *reg_.omega);
  }
  ev.total = ev.cost + ev.gamma * ev.c_tee;
  ev.gradient = adjoint_gradient(ansatz_, theta, psi, cov);
  return ev;
}

double regularized_cost(const VariationalProblem& problem, std::span<const double> theta, int step) {
  return problem.evaluate(theta, step, false).total;
}

}  // namespace qsparse::vqa
