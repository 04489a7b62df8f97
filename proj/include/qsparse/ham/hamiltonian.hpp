#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsparse/core/ansatz.hpp"
#include "qsparse/core/state_vector.hpp"

namespace qsparse::ham {

/// coefficient * prod_q sigma^{axis_q}_q. Identity factors are simply absent.
struct PauliString {
  double coefficient = 1.0;
  std::map<int, Axis> factors;

  /// e.g. "+1 X0 X1"; the identity prints as "+1 I".
  std::string to_string() const;
};

/// Pauli word in bit-mask form for a register of n qubits.
struct PauliMasks {
  std::uint64_t flip = 0;   ///< basis bits toggled by X and Y
  std::uint64_t phase = 0;  ///< basis bits whose value contributes a (-1) (Z and Y)
  int num_y = 0;
};
PauliMasks pauli_masks(const PauliString& p, int num_qubits);

class Hamiltonian {
 public:
  Hamiltonian(int num_qubits, std::vector<PauliString> terms);

  int num_qubits() const { return num_qubits_; }
  const std::vector<PauliString>& terms() const { return terms_; }

  /// One term per line.
  std::string to_string() const;

 private:
  int num_qubits_;
  std::vector<PauliString> terms_;
};

/// Lx x Ly square lattice, open boundary, site (x, y) -> qubit y*Lx + x.
struct LatticeSpec {
  int lx;
  int ly;

  int num_sites() const { return lx * ly; }
  int site(int x, int y) const { return y * lx + x; }
  /// Throws InvalidArgument for non-positive sides or fewer than two sites.
  void validate() const;
  /// Nearest-neighbour bonds (i < j), horizontal bonds of each row first.
  std::vector<std::pair<int, int>> bonds() const;
  bool adjacent(int a, int b) const;
};

/// J sum_<ij> (X_i X_j + Y_i Y_j + Z_i Z_j) + h sum_i Z_i. Zero couplings add no terms.
Hamiltonian build_af2dnnh(const LatticeSpec& lattice, double j, double h);

/// H|psi>, term by term.
StateVector apply_hamiltonian(const Hamiltonian& h, const StateVector& psi);

/// Re <psi|H|psi> without forming H.
double expectation(const StateVector& psi, const Hamiltonian& h);

/// Largest register for the dense paths below.
inline constexpr int kMaxDenseQubits = 12;

Eigen::MatrixXcd dense_matrix(const Hamiltonian& h);

struct GroundState {
  double energy;
  StateVector state;
};

/// Lowest eigenpair of the dense matrix.
GroundState exact_ground_state(const Hamiltonian& h);
double exact_ground_energy(const Hamiltonian& h);

}  // namespace qsparse::ham
