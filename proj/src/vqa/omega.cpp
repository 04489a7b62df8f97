#include "qsparse/vqa/omega.hpp"

#include "qsparse/core/errors.hpp"

namespace qsparse::vqa {

OmegaSet::OmegaSet(std::vector<RegionTriplet> triplets) : triplets_(std::move(triplets)) {
  require(!triplets_.empty(), "triplet set is empty");
  for (const auto& t : triplets_)
    require(!t.a.overlaps(t.b) && !t.a.overlaps(t.c) && !t.b.overlaps(t.c),
            "triplet regions overlap: " + t.a.to_string() + " " + t.b.to_string() + " " +
                t.c.to_string());
}

void OmegaSet::validate(int num_qubits) const {
  for (const auto& t : triplets_) {
    t.a.validate(num_qubits);
    t.b.validate(num_qubits);
    t.c.validate(num_qubits);
  }
}

std::uint64_t OmegaSet::support_mask() const {
  std::uint64_t m = 0;
  for (const auto& t : triplets_) m |= t.a.mask() | t.b.mask() | t.c.mask();
  return m;
}

OmegaSet build_omega_contiguous(int num_qubits, int block) {
  require(block >= 1, "block size must be positive");
  require(3 * block <= num_qubits, "three blocks of " + std::to_string(block) +
                                       " do not fit on " + std::to_string(num_qubits) + " qubits");
  const int n = num_qubits;
  std::vector<RegionTriplet> out;
  // B and C live in the arc of n - block qubits following A; offsets are
  // measured from the end of A, so disjointness is an interval condition.
  const int arc = n - block;
  for (int a = 0; a < n; ++a)
    for (int ob = 0; ob + block <= arc; ++ob)
      for (int oc = ob + block; oc + block <= arc; ++oc)
        out.push_back({Region::periodic_block(a, block, n),
                       Region::periodic_block((a + block + ob) % n, block, n),
                       Region::periodic_block((a + block + oc) % n, block, n)});
  return OmegaSet(std::move(out));
}

OmegaSet build_omega_lshape(const ham::LatticeSpec& lattice) {
  require(lattice.lx >= 2 && lattice.ly >= 2, "L-shaped triplets need a lattice of at least 2x2");
  const int n = lattice.num_sites();
  std::vector<RegionTriplet> out;
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      for (int c = a + 1; c < n; ++c) {
        if (!lattice.adjacent(a, b) || !lattice.adjacent(c, b)) continue;
        const bool same_row = a / lattice.lx == c / lattice.lx;
        const bool same_col = a % lattice.lx == c % lattice.lx;
        if (same_row || same_col) continue;
        out.push_back({Region{a}, Region{b}, Region{c}});
      }
  return OmegaSet(std::move(out));
}

OmegaSet quarters_omega(int num_qubits) {
  require(num_qubits >= 4, "quarter triplet needs at least 4 qubits");
  const int m = num_qubits / 4;
  return OmegaSet({{Region::range(0, m), Region::range(m, 2 * m), Region::range(2 * m, 3 * m)}});
}

}  // namespace qsparse::vqa
