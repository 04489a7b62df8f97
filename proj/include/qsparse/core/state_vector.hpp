#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qsparse/core/random.hpp"

namespace qsparse {

using Complex = std::complex<double>;

/// Row-major 2x2 single-qubit operator {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

/// Largest register the simulator will allocate (2^28 amplitudes = 4 GiB).
inline constexpr int kMaxQubits = 28;

/// Bit of basis index i that holds qubit q. Qubit 0 is the most significant bit,
/// so basis index i = b_{n-1}...b_0 has qubit q in bit b_{n-1-q} and maps to the
/// grid point x_i = i * 2^-n.
constexpr std::uint64_t qubit_bit(int num_qubits, int qubit) {
  return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

/// Pure state of n qubits as 2^n complex amplitudes (big-endian qubit order).
class StateVector {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit StateVector(int num_qubits);

  /// Takes ownership of `amps`; length must be a power of two. With
  /// `normalize` the vector is rescaled to unit norm (zero vector is an error).
  static StateVector from_amplitudes(std::vector<Complex> amps, bool normalize = true);
  static StateVector basis_state(int num_qubits, std::uint64_t index);
  /// (single)^{\otimes n}; `single` is normalized first.
  static StateVector product_state(int num_qubits, const std::array<Complex, 2>& single);
  /// Haar-random pure state (normalized complex Gaussian vector).
  static StateVector haar_random(int num_qubits, Rng& rng);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }

  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

  double norm() const;
  void normalize();

  /// <this|other>
  Complex inner(const StateVector& other) const;

  void apply_1q(const Mat2& m, int qubit);
  void apply_cnot(int control, int target);
  /// Dense two-qubit operator, row-major 4x4 in the basis |q0 q1> (q0 is the
  /// more significant bit of the local index).
  void apply_2q(std::span<const Complex, 16> m, int q0, int q1);

 private:
  StateVector(int num_qubits, std::vector<Complex> amps);

  int num_qubits_;
  std::vector<Complex> amps_;
};

/// Max |a_i - b_i| over all amplitudes; states must have equal size.
double max_abs_diff(const StateVector& a, const StateVector& b);

}  // namespace qsparse
