#include "qsparse/core/density.hpp"

#include <bit>
#include <cmath>

#include "qsparse/core/errors.hpp"

namespace qsparse {

namespace {

// Basis-index offsets for every assignment of the given qubits (first qubit = MSB).
std::vector<std::uint64_t> offsets_for(int num_qubits, const std::vector<int>& qubits) {
  const int k = static_cast<int>(qubits.size());
  std::vector<std::uint64_t> off(std::size_t{1} << k, 0);
  for (std::size_t r = 0; r < off.size(); ++r) {
    std::uint64_t o = 0;
    for (int j = 0; j < k; ++j) {
      if (r & (std::size_t{1} << (k - 1 - j))) o |= qubit_bit(num_qubits, qubits[j]);
    }
    off[r] = o;
  }
  return off;
}

}  // namespace

void ReducedDensityOperator::validate(double tol) const {
  if (mat.rows() != mat.cols()) throw InvalidState("density operator is not square");
  if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > tol) throw InvalidState("density operator is not Hermitian");
  if (std::abs(mat.trace() - Complex(1.0, 0.0)) > tol) throw InvalidState("density operator trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) throw InvalidState("density operator has a negative eigenvalue");
}

Eigen::MatrixXcd region_matrix(const StateVector& psi, std::uint64_t mask) {
  const int n = psi.num_qubits();
  const std::uint64_t full = full_mask(n);
  if (mask & ~full) throw InvalidArgument("region mask out of range");
  const auto rows = offsets_for(n, qubits_of_mask(mask));
  const auto cols = offsets_for(n, qubits_of_mask(full & ~mask));
  Eigen::MatrixXcd m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) m(r, c) = psi[rows[r] | cols[c]];
  }
  return m;
}

void scatter_region_matrix(const Eigen::MatrixXcd& m, std::uint64_t mask, StateVector& out) {
  const int n = out.num_qubits();
  const std::uint64_t full = full_mask(n);
  const auto rows = offsets_for(n, qubits_of_mask(mask));
  const auto cols = offsets_for(n, qubits_of_mask(full & ~mask));
  if (static_cast<std::size_t>(m.rows()) != rows.size() || static_cast<std::size_t>(m.cols()) != cols.size()) {
    throw InvalidArgument("region matrix shape mismatch");
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) out[rows[r] | cols[c]] = m(r, c);
  }
}

ReducedDensityOperator reduced_density(const StateVector& psi, const Region& region) {
  region.validate(psi.num_qubits());
  const Eigen::MatrixXcd m = region_matrix(psi, region.mask());
  Eigen::MatrixXcd rho = m * m.adjoint();
  return ReducedDensityOperator{region, std::move(rho)};
}

double purity(const StateVector& psi, std::uint64_t mask) {
  const int n = psi.num_qubits();
  const std::uint64_t full = full_mask(n);
  mask &= full;
  if (mask == 0 || mask == full) {
    const double nrm2 = psi.norm() * psi.norm();
    return nrm2 * nrm2;
  }
  if (2 * std::popcount(mask) > n) mask = full & ~mask;
  const Eigen::MatrixXcd m = region_matrix(psi, mask);
  const Eigen::MatrixXcd rho = m * m.adjoint();
  return rho.squaredNorm();
}

}  // namespace qsparse
