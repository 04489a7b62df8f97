#include "qsparse/enc/ksparse.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "qsparse/core/errors.hpp"
#include "qsparse/core/random.hpp"

namespace qsparse::enc {

StateVector k_sparse_state(const SparseStateSpec& spec) {
  StateVector psi(spec.num_qubits);
  const std::uint64_t dim = psi.dim();
  require(spec.sparsity >= 1 && spec.sparsity <= dim, "K must lie in [1, 2^n]");
  Rng rng(spec.seed);

  // Floyd's sampling of K distinct indices.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(spec.sparsity);
  for (std::uint64_t j = dim - spec.sparsity; j < dim; ++j) {
    const std::uint64_t t = uniform_index(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> idx(chosen.begin(), chosen.end());
  std::sort(idx.begin(), idx.end());

  const double mag = 1.0 / std::sqrt(static_cast<double>(spec.sparsity));
  psi[0] = 0.0;
  for (std::uint64_t i : idx) psi[i] = std::polar(mag, uniform_angle(rng));
  return psi;
}

}  // namespace qsparse::enc
