#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qsparse/core/random.hpp"
#include "qsparse/core/state_vector.hpp"

namespace qsparse {

/// Haar-distributed d x d unitary: QR of a complex Ginibre matrix with the
/// phases of R's diagonal moved into Q.
Eigen::MatrixXcd haar_unitary(int dim, Rng& rng);

/// Haar SU(4) blocks for one brick layer (layer parity as in brick_pairs:
/// odd `layer` pairs (2i+1, 2i+2)). One block per pair, determinant fixed to 1.
std::vector<Eigen::Matrix4cd> haar_su4_layer(int num_qubits, int layer, Rng& rng);

/// Applies the blocks from haar_su4_layer; block j acts on brick_pairs(n, layer)[j]
/// with the pair's control qubit as the more significant local bit.
void apply_su4_layer(StateVector& psi, int layer, const std::vector<Eigen::Matrix4cd>& blocks);

}  // namespace qsparse
