#include <doctest.h>

#include "helpers.hpp"
#include "qsparse/core/errors.hpp"
#include "qsparse/ham/hamiltonian.hpp"

using namespace qsparse;
using namespace qsparse::ham;

namespace {

Eigen::MatrixXcd kron_oracle(const Hamiltonian& h) {
  const int n = h.num_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(1 << n, 1 << n);
  for (const auto& t : h.terms()) {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
      auto it = t.factors.find(q);
      p = testing::kron(p, it == t.factors.end() ? Eigen::MatrixXcd::Identity(2, 2)
                                                 : Eigen::MatrixXcd(testing::pauli(it->second)));
    }
    m += t.coefficient * p;
  }
  return m;
}

}  // namespace

TEST_CASE("lattice bonds and term counts") {
  const LatticeSpec l{3, 3};
  CHECK(l.bonds().size() == 12);
  const Hamiltonian h = build_af2dnnh(l, 1.0, 2.0);
  CHECK(h.terms().size() == 36 + 9);
  CHECK(build_af2dnnh({2, 1}, 1.0, 0.0).terms().size() == 3);
  CHECK(l.adjacent(0, 1));
  CHECK_FALSE(l.adjacent(2, 3));
  CHECK_THROWS_AS(build_af2dnnh({1, 1}, 1.0, 0.0), InvalidArgument);
}

TEST_CASE("dense matrix matches Kronecker oracle") {
  Rng rng(17);
  const Hamiltonian h = build_af2dnnh({3, 2}, 0.7, -1.3);
  const Eigen::MatrixXcd d = dense_matrix(h);
  CHECK((d - kron_oracle(h)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((d - d.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  const StateVector psi = StateVector::haar_random(6, rng);
  const Eigen::VectorXcd hv = d * testing::to_eigen(psi);
  CHECK((testing::to_eigen(apply_hamiltonian(h, psi)) - hv).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(expectation(psi, h) == doctest::Approx((testing::to_eigen(psi).adjoint() * hv)(0).real()).epsilon(1e-10));
}

TEST_CASE("Pauli masks include Y phases") {
  PauliString p{1.0, {{0, Axis::Y}, {2, Axis::Z}}};
  const PauliMasks m = pauli_masks(p, 3);
  CHECK(m.flip == 0b100);
  CHECK(m.phase == 0b101);
  CHECK(m.num_y == 1);
  CHECK(p.to_string() == "+1 Y0 Z2");
}

TEST_CASE("analytic ground energies") {
  CHECK(exact_ground_energy(build_af2dnnh({2, 1}, 1.0, 0.0)) == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(exact_ground_energy(build_af2dnnh({2, 2}, 0.0, 2.0)) == doctest::Approx(-8.0).epsilon(1e-12));
  const Hamiltonian field = build_af2dnnh({3, 1}, 0.0, 1.5);
  CHECK(expectation(StateVector(3), field) == doctest::Approx(4.5));
  const auto gs = exact_ground_state(build_af2dnnh({3, 2}, 1.0, 0.5));
  CHECK(expectation(gs.state, build_af2dnnh({3, 2}, 1.0, 0.5)) == doctest::Approx(gs.energy).epsilon(1e-10));
}

TEST_CASE("3x3 benchmark ground energy baseline") {
  // Pinned from dense diagonalization.
  CHECK(exact_ground_energy(build_af2dnnh({3, 3}, 1.0, 2.0)) == doctest::Approx(-21.034625).epsilon(1e-7));
}

TEST_CASE("dense size cap") {
  CHECK_THROWS_AS(dense_matrix(build_af2dnnh({13, 1}, 1.0, 1.0)), SizeLimitExceeded);
}
