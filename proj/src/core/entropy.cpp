#include "qsparse/core/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "qsparse/core/errors.hpp"

namespace qsparse {

EntropyOrder::EntropyOrder(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidArgument("entropy order must be finite and >= 0");
}

double renyi_entropy_of_spectrum(std::span<const double> eigenvalues, EntropyOrder order) {
  if (eigenvalues.empty()) throw InvalidArgument("empty spectrum");
  const double lmin = *std::min_element(eigenvalues.begin(), eigenvalues.end());
  if (lmin < -kNegativeEigenTolerance) throw InvalidState("density operator has a negative eigenvalue");
  const double lmax = *std::max_element(eigenvalues.begin(), eigenvalues.end());
  const double alpha = order.alpha();

  if (alpha == 0.0) {
    const double cut = kHartleyRankTolerance * lmax;
    const auto rank = std::count_if(eigenvalues.begin(), eigenvalues.end(), [cut](double l) { return l > cut; });
    return std::log(static_cast<double>(rank));
  }
  if (alpha == 1.0) {
    double s = 0.0;
    for (double l : eigenvalues) {
      if (l > 0.0) s -= l * std::log(l);
    }
    return s;
  }
  double acc = 0.0;
  if (alpha == 2.0) {
    for (double l : eigenvalues) acc += l * l;
  } else {
    // For alpha < 1 roundoff-level eigenvalues of a rank-deficient operator
    // would contribute eps^alpha each; treat them as exact zeros.
    const double floor = alpha < 1.0
        ? static_cast<double>(eigenvalues.size()) * std::numeric_limits<double>::epsilon() * lmax
        : 0.0;
    for (double l : eigenvalues) {
      if (l > floor) acc += std::pow(l, alpha);
    }
  }
  return std::log(acc) / (1.0 - alpha);
}

double renyi_entropy(const ReducedDensityOperator& rho, EntropyOrder order) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  return renyi_entropy_of_spectrum(std::span<const double>(ev.data(), ev.size()), order);
}

double entanglement_entropy(const StateVector& psi, std::uint64_t mask, EntropyOrder order) {
  const int n = psi.num_qubits();
  const std::uint64_t full = full_mask(n);
  if (mask & ~full) throw InvalidArgument("region out of range");
  if (mask == 0 || mask == full) return 0.0;
  if (2 * std::popcount(mask) > n) mask = full & ~mask;
  if (order.alpha() == 2.0) return -std::log(purity(psi, mask));
  const Eigen::MatrixXcd m = region_matrix(psi, mask);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m * m.adjoint(), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  return renyi_entropy_of_spectrum(std::span<const double>(ev.data(), ev.size()), order);
}

double entanglement_entropy(const StateVector& psi, const Region& region, EntropyOrder order) {
  region.validate(psi.num_qubits());
  return entanglement_entropy(psi, region.mask(), order);
}

double mutual_information(const StateVector& psi, const Region& a, const Region& b, EntropyOrder order) {
  if (a.overlaps(b)) throw InvalidArgument("mutual information needs disjoint regions");
  a.validate(psi.num_qubits());
  b.validate(psi.num_qubits());
  return entanglement_entropy(psi, a.mask(), order) + entanglement_entropy(psi, b.mask(), order) -
         entanglement_entropy(psi, a.mask() | b.mask(), order);
}

double tee(const StateVector& psi, const Region& a, const Region& b, const Region& c, EntropyOrder order) {
  if (a.overlaps(b) || a.overlaps(c) || b.overlaps(c)) throw InvalidArgument("TEE regions must be pairwise disjoint");
  const int n = psi.num_qubits();
  a.validate(n);
  b.validate(n);
  c.validate(n);
  const std::uint64_t ma = a.mask(), mb = b.mask(), mc = c.mask();
  auto s = [&](std::uint64_t m) { return entanglement_entropy(psi, m, order); };
  // I(A:B) + I(A:C) - I(A:BC)
  return (s(ma) + s(mb) - s(ma | mb)) + (s(ma) + s(mc) - s(ma | mc)) - (s(ma) + s(mb | mc) - s(ma | mb | mc));
}

double tee_contiguous(const StateVector& psi, EntropyOrder order) {
  const int n = psi.num_qubits();
  if (n < 4) throw InvalidArgument("tee_contiguous needs at least 4 qubits");
  const int m = n / 4;
  return tee(psi, Region::range(0, m), Region::range(m, 2 * m), Region::range(2 * m, 3 * m), order);
}

}  // namespace qsparse
