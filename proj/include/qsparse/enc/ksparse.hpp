#pragma once

#include <cstdint>

#include "qsparse/core/state_vector.hpp"

namespace qsparse::enc {

struct SparseStateSpec {
  int num_qubits;
  std::uint64_t sparsity;  ///< K
  std::uint64_t seed;
};

/// K distinct basis states chosen uniformly, each with amplitude
/// e^{i phi}/sqrt(K), phi uniform on [0, 2 pi).
StateVector k_sparse_state(const SparseStateSpec& spec);

}  // namespace qsparse::enc
