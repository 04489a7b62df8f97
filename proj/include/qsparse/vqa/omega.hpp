#pragma once

#include <vector>

#include "qsparse/core/region.hpp"
#include "qsparse/ham/hamiltonian.hpp"

namespace qsparse::vqa {

struct RegionTriplet {
  Region a;
  Region b;
  Region c;
};

/// Nonempty list of triplets whose members are pairwise disjoint.
class OmegaSet {
 public:
  explicit OmegaSet(std::vector<RegionTriplet> triplets);

  const std::vector<RegionTriplet>& triplets() const { return triplets_; }
  std::size_t size() const { return triplets_.size(); }
  /// Throws InvalidArgument if any qubit lies outside [0, num_qubits).
  void validate(int num_qubits) const;
  /// Union of all member masks (qubit-index bits).
  std::uint64_t support_mask() const;

 private:
  std::vector<RegionTriplet> triplets_;
};

/// Every placement of three disjoint blocks of `block` consecutive qubits on
/// the periodic chain, A ordered and {B, C} unordered. Needs 3*block <= n.
OmegaSet build_omega_contiguous(int num_qubits, int block);

/// Single-site triplets ({a}, {b}, {c}) with b adjacent to a and c and the
/// three sites forming a right angle at b; {a, c} unordered.
OmegaSet build_omega_lshape(const ham::LatticeSpec& lattice);

/// The quarter triplet A=[0,m), B=[m,2m), C=[2m,3m), m = n/4.
OmegaSet quarters_omega(int num_qubits);

}  // namespace qsparse::vqa
