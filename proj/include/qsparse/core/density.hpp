#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qsparse/core/region.hpp"
#include "qsparse/core/state_vector.hpp"

namespace qsparse {

/// rho_A = Tr_{complement} |psi><psi| for a qubit region A.
/// Row/column index r enumerates the region's qubits big-endian in ascending
/// qubit order (the lowest qubit index is the most significant bit of r).
struct ReducedDensityOperator {
  Region region;
  Eigen::MatrixXcd mat;

  int dim() const { return static_cast<int>(mat.rows()); }
  /// Throws InvalidState if rho is not Hermitian, trace-one and PSD within `tol`.
  void validate(double tol = 1e-10) const;
};

ReducedDensityOperator reduced_density(const StateVector& psi, const Region& region);

/// Splits amplitudes into a matrix M with rows indexed by the qubits in `mask`
/// and columns by the remaining qubits, so that rho_mask = M M^dagger.
Eigen::MatrixXcd region_matrix(const StateVector& psi, std::uint64_t mask);

/// Inverse of region_matrix: writes M back into amplitude order.
void scatter_region_matrix(const Eigen::MatrixXcd& m, std::uint64_t mask, StateVector& out);

/// Tr rho^2 for the qubits in `mask`, computed on the smaller side of the cut.
/// Full or empty masks give ||psi||^4.
double purity(const StateVector& psi, std::uint64_t mask);

/// Mask with bits [0, n) set.
constexpr std::uint64_t full_mask(int num_qubits) {
  return num_qubits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_qubits) - 1;
}

}  // namespace qsparse
