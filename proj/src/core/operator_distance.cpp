#include "qsparse/core/operator_distance.hpp"

#include <cmath>

#include "qsparse/core/errors.hpp"

namespace qsparse {

Eigen::MatrixXcd circuit_unitary(const BrickworkAnsatz& ansatz, std::span<const double> theta) {
  const int n = ansatz.num_qubits();
  if (n > kMaxDenseQubits) throw SizeLimitExceeded("dense unitary limited to " + std::to_string(kMaxDenseQubits) + " qubits");
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd u(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const StateVector col = apply_ansatz(ansatz, theta, StateVector::basis_state(n, j));
    for (std::size_t i = 0; i < dim; ++i) u(i, j) = col[i];
  }
  return u;
}

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

double circuit_operator_distance(const BrickworkAnsatz& ansatz, std::span<const double> theta,
                                 std::span<const double> theta_tilde) {
  return spectral_norm(circuit_unitary(ansatz, theta) - circuit_unitary(ansatz, theta_tilde));
}

double rotation_gate_error(double delta) { return 2.0 * std::abs(std::sin(delta / 4.0)); }

}  // namespace qsparse
