#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qsparse/core/state_vector.hpp"

namespace qsparse {

enum class Axis { X, Y, Z };

char axis_name(Axis axis);
Axis parse_axis(char c);

/// R(theta) = exp(-i theta/2 sigma^axis).
Mat2 rotation_matrix(Axis axis, double theta);
/// sigma^axis as a 2x2 matrix.
Mat2 pauli_matrix(Axis axis);

/// One parameterized rotation R_{d,i}(theta_{d,i}).
struct RotationGateSpec {
  int layer;  ///< d >= 1
  int qubit;
  Axis axis;
  std::size_t param_index;
};

/// Two-qubit block position: CNOT control and target.
struct BrickPair {
  int control;
  int target;
};

/// CNOT pairs of brick layer `layer` (1-based) on a periodic chain of n qubits.
/// Odd layers pair (2i+1, 2i+2), even layers (2i, 2i+1), indices mod n, for
/// i < floor(n/2). The control is the lower index, so the wrap-around pair
/// (n-1, 0) has control 0. For odd n the leftover qubit has no partner.
std::vector<BrickPair> brick_pairs(int num_qubits, int layer);

/// Elementary operation of a compiled circuit.
struct CircuitOp {
  enum class Kind { Rotation, Cnot } kind;
  int q0;  ///< rotation qubit, or CNOT control
  int q1;  ///< CNOT target (unused for rotations)
  Axis axis;
  std::size_t param_index;
};

/// Layered brickwork circuit U(theta) = U_Dtot ... U_1. Every layer rotates every
/// qubit once (parameter index (d-1)*n + i) and each block is two rotations
/// (control qubit first) followed by the CNOT.
class BrickworkAnsatz {
 public:
  /// `axes` holds one axis per rotation in parameter order (size n*Dtot).
  BrickworkAnsatz(int num_qubits, int total_layers, std::vector<Axis> axes);

  static BrickworkAnsatz with_random_axes(int num_qubits, int total_layers, Rng& rng);
  static BrickworkAnsatz with_uniform_axis(int num_qubits, int total_layers, Axis axis);

  int num_qubits() const { return num_qubits_; }
  int total_layers() const { return total_layers_; }
  std::size_t num_parameters() const { return axes_.size(); }
  std::size_t param_index(int layer, int qubit) const {
    return static_cast<std::size_t>(layer - 1) * num_qubits_ + qubit;
  }
  Axis axis(std::size_t param) const { return axes_[param]; }
  const std::vector<Axis>& axes() const { return axes_; }

  /// Rotations in application order.
  std::vector<RotationGateSpec> gates() const;
  /// Flattened op sequence in application order.
  const std::vector<CircuitOp>& ops() const { return ops_; }
  /// Index into ops() where layer `layer` (1-based) begins; layer Dtot+1 is the end.
  std::size_t layer_begin(int layer) const { return layer_offsets_[layer - 1]; }

  /// Same axes, only the first `layers` layers.
  BrickworkAnsatz truncated(int layers) const;

 private:
  int num_qubits_;
  int total_layers_;
  std::vector<Axis> axes_;
  std::vector<CircuitOp> ops_;
  std::vector<std::size_t> layer_offsets_;
};

/// U(theta) psi0. Throws on parameter-count or qubit-count mismatch.
StateVector apply_ansatz(const BrickworkAnsatz& ansatz, std::span<const double> theta,
                         const StateVector& psi0);

/// Applies ops [first, last) of the ansatz in place.
void apply_ops(const BrickworkAnsatz& ansatz, std::span<const double> theta, std::size_t first,
               std::size_t last, StateVector& psi);

/// Gradient of a real function f of the output state by reverse-mode sweep.
/// `covector` is g = df/d<psi| evaluated at `output` = U(theta) psi0; returns
/// df/dtheta_j = 2 Re <d_j psi | g> for every parameter.
std::vector<double> adjoint_gradient(const BrickworkAnsatz& ansatz, std::span<const double> theta,
                                     const StateVector& output, const StateVector& covector);

/// (Y^{1/4}|0>)^{\otimes n} with the principal root: Y eigenvalue +1 -> 1,
/// eigenvalue -1 -> e^{i pi/4}.
StateVector fourth_root_y_state(int num_qubits);

}  // namespace qsparse
