#include "qsparse/core/haar.hpp"

#include <cmath>

#include "qsparse/core/ansatz.hpp"
#include "qsparse/core/errors.hpp"

namespace qsparse {

Eigen::MatrixXcd haar_unitary(int dim, Rng& rng) {
  require(dim >= 1, "unitary dimension must be positive");
  Eigen::MatrixXcd z(dim, dim);
  const double s = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      const double re = standard_normal(rng);
      const double im = standard_normal(rng);
      z(i, j) = Complex(s * re, s * im);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    q.col(j) *= mag > 0.0 ? r(j, j) / mag : Complex(1.0, 0.0);
  }
  return q;
}

std::vector<Eigen::Matrix4cd> haar_su4_layer(int num_qubits, int layer, Rng& rng) {
  const auto pairs = brick_pairs(num_qubits, layer);
  std::vector<Eigen::Matrix4cd> blocks;
  blocks.reserve(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    Eigen::Matrix4cd u = haar_unitary(4, rng);
    u *= std::pow(u.determinant(), -0.25);
    blocks.push_back(u);
  }
  return blocks;
}

void apply_su4_layer(StateVector& psi, int layer, const std::vector<Eigen::Matrix4cd>& blocks) {
  const auto pairs = brick_pairs(psi.num_qubits(), layer);
  require(pairs.size() == blocks.size(), "one SU(4) block per brick pair required");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    std::array<Complex, 16> m;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) m[4 * r + c] = blocks[k](r, c);
    }
    psi.apply_2q(m, pairs[k].control, pairs[k].target);
  }
}

}  // namespace qsparse
