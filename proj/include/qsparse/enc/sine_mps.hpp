#pragma once

#include <Eigen/Dense>

#include "qsparse/core/state_vector.hpp"

namespace qsparse::enc {

/// Bond-dimension-2 MPS whose contraction is sin(k x_i + phi) on the n-qubit
/// dyadic grid. Site q carries the rotation R(sigma_q k / 2^{q+1}) with
/// R(b) = [[cos b, sin b], [-sin b, cos b]]; the boundary tensors are the row
/// (cos(sigma k/2 + phi), sin(sigma k/2 + phi)) and the column
/// (sin(sigma k/2^n), cos(sigma k/2^n))^T. For sigma = 0 every tensor is the identity
/// (up to the phase on the first site).
class SineMPS {
 public:
  SineMPS(double k, double phi, int num_qubits);

  double k() const { return k_; }
  double phi() const { return phi_; }
  int num_qubits() const { return n_; }

  /// M^(sigma) at site q: 1x2 for q = 0, 2x1 for q = n-1, 2x2 otherwise.
  Eigen::MatrixXd tensor(int site, int sigma) const;

  /// Unnormalized amplitudes by sequential contraction (O(2^n)).
  std::vector<double> contract() const;
  /// Normalized state. Throws InvalidArgument if every amplitude vanishes.
  StateVector to_state() const;

  /// sum_sigma M^T L M over the first r sites (r = 0 gives the 1x1 identity).
  Eigen::MatrixXd left_environment(int r) const;
  /// sum_sigma M R M^T over the last r sites (r = 0 gives the 1x1 identity).
  Eigen::MatrixXd right_environment(int r) const;

  /// Single-qubit RDO of site q from the two environments, trace-normalized.
  Eigen::Matrix2d site_density(int site) const;

 private:
  double k_;
  double phi_;
  int n_;
};

/// Normalized sin(k x_i + phi) state built from the MPS.
StateVector sine_mps_state(double k, double phi, int num_qubits);

/// n -> infinity single-qubit RDO of qubit q, evaluated term by term from the
/// closed form with t = 2^{-q-1} k and denominator 4k - 2 sin(2(k+phi)) + 2 sin(2 phi).
/// This expression equals the limit for the reflected profile sin(k(1-x) + phi);
/// for phi = 0 and integer periods it coincides with sin(kx).
Eigen::Matrix2d sine_rdo_closed_form(double k, double phi, int q);

}  // namespace qsparse::enc
