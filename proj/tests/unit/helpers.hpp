#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "qsparse/core/ansatz.hpp"
#include "qsparse/core/random.hpp"
#include "qsparse/core/state_vector.hpp"

namespace testing {

using qsparse::Complex;

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Eigen::Matrix2cd pauli(qsparse::Axis ax) {
  Eigen::Matrix2cd m;
  const Complex i(0, 1);
  switch (ax) {
    case qsparse::Axis::X: m << 0, 1, 1, 0; break;
    case qsparse::Axis::Y: m << 0, -i, i, 0; break;
    case qsparse::Axis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

/// Single-qubit operator embedded at `qubit`, qubit 0 leftmost in the product.
inline Eigen::MatrixXcd embed(const Eigen::Matrix2cd& m, int qubit, int n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = 0; q < n; ++q) out = kron(out, q == qubit ? Eigen::MatrixXcd(m) : Eigen::MatrixXcd::Identity(2, 2));
  return out;
}

inline Eigen::MatrixXcd cnot_dense(int control, int target, int n) {
  Eigen::Matrix2cd p0, p1;
  p0 << 1, 0, 0, 0;
  p1 << 0, 0, 0, 1;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(1, 1), b = a;
  for (int q = 0; q < n; ++q) {
    a = kron(a, q == control ? Eigen::MatrixXcd(p0) : Eigen::MatrixXcd::Identity(2, 2));
    Eigen::MatrixXcd f = Eigen::MatrixXcd::Identity(2, 2);
    if (q == control) f = p1;
    if (q == target) f = pauli(qsparse::Axis::X);
    b = kron(b, f);
  }
  return a + b;
}

inline Eigen::Matrix2cd rotation(qsparse::Axis ax, double theta) {
  return std::cos(theta / 2) * Eigen::Matrix2cd::Identity() - Complex(0, 1) * std::sin(theta / 2) * pauli(ax);
}

inline Eigen::VectorXcd to_eigen(const qsparse::StateVector& psi) {
  Eigen::VectorXcd v(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) v[i] = psi[i];
  return v;
}

inline std::vector<double> random_angles(std::size_t count, qsparse::Rng& rng) {
  std::vector<double> t(count);
  for (double& x : t) x = qsparse::uniform_angle(rng);
  return t;
}

inline qsparse::StateVector ghz(int n) {
  std::vector<Complex> a(std::size_t{1} << n, 0.0);
  a.front() = a.back() = 1.0 / std::sqrt(2.0);
  return qsparse::StateVector::from_amplitudes(std::move(a), false);
}

}  // namespace testing
