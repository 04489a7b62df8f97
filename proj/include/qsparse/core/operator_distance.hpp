#pragma once

#include <span>

#include <Eigen/Dense>

#include "qsparse/core/ansatz.hpp"

namespace qsparse {

/// Dense unitaries are limited to this many qubits.
inline constexpr int kMaxDenseQubits = 10;

/// U(theta) as a dense 2^n x 2^n matrix (column j = U|j>).
Eigen::MatrixXcd circuit_unitary(const BrickworkAnsatz& ansatz, std::span<const double> theta);

/// Largest singular value.
double spectral_norm(const Eigen::MatrixXcd& m);

/// ||U(theta) - U(theta_tilde)|| in the operator norm.
double circuit_operator_distance(const BrickworkAnsatz& ansatz, std::span<const double> theta,
                                 std::span<const double> theta_tilde);

/// ||R(theta + delta) - R(theta)|| = 2 |sin(delta / 4)| for any Pauli rotation.
double rotation_gate_error(double delta);

}  // namespace qsparse
