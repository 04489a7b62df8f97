#pragma once

#include <span>

#include "qsparse/core/density.hpp"

namespace qsparse {

/// Order alpha >= 0 of a Renyi entropy; 0 is Hartley (log rank), 1 von Neumann.
class EntropyOrder {
 public:
  explicit EntropyOrder(double alpha);
  static EntropyOrder hartley() { return EntropyOrder(0.0); }
  static EntropyOrder von_neumann() { return EntropyOrder(1.0); }
  static EntropyOrder collision() { return EntropyOrder(2.0); }
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

/// Relative eigenvalue cutoff for the alpha = 0 rank count.
inline constexpr double kHartleyRankTolerance = 1e-12;
/// Eigenvalues below -kNegativeEigenTolerance mark an invalid state.
inline constexpr double kNegativeEigenTolerance = 1e-10;

/// Renyi entropy in nats of a spectrum (eigenvalues of a density operator).
double renyi_entropy_of_spectrum(std::span<const double> eigenvalues, EntropyOrder order);

/// S^(alpha)(rho) = ln(Tr rho^alpha) / (1 - alpha), natural log, from the
/// Hermitian eigenvalues of rho.
double renyi_entropy(const ReducedDensityOperator& rho, EntropyOrder order);

/// S^(alpha) of `region` in the pure state psi, evaluated on whichever side of
/// the bipartition is smaller. The whole register has entropy 0.
double entanglement_entropy(const StateVector& psi, const Region& region, EntropyOrder order);
double entanglement_entropy(const StateVector& psi, std::uint64_t mask, EntropyOrder order);

/// I(A:B) = S(A) + S(B) - S(A u B) with S = entanglement_entropy. A, B disjoint.
double mutual_information(const StateVector& psi, const Region& a, const Region& b,
                          EntropyOrder order);

/// Tripartite information I(A:B) + I(A:C) - I(A:BC); regions pairwise disjoint.
double tee(const StateVector& psi, const Region& a, const Region& b, const Region& c,
           EntropyOrder order);

/// tee on A=[0,m), B=[m,2m), C=[2m,3m) with m = floor(n/4); needs n >= 4.
double tee_contiguous(const StateVector& psi, EntropyOrder order);

}  // namespace qsparse
