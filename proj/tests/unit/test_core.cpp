#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qsparse/core/density.hpp"
#include "qsparse/core/entropy.hpp"
#include "qsparse/core/errors.hpp"
#include "qsparse/core/haar.hpp"
#include "qsparse/core/operator_distance.hpp"
#include "qsparse/core/parallel.hpp"
#include "qsparse/core/qft.hpp"

using namespace qsparse;
using testing::kron;

namespace {

// Pairs of brick layer d written out directly from the layout rule.
std::vector<std::pair<int, int>> layout_pairs(int n, int d) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n / 2; ++i) {
    const int a = (d % 2 ? 2 * i + 1 : 2 * i) % n, b = (a + 1) % n;
    p.emplace_back(std::min(a, b), std::max(a, b));
  }
  return p;
}

Eigen::MatrixXcd dense_circuit(int n, int depth, const std::vector<Axis>& axes, const std::vector<double>& th) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(1 << n, 1 << n);
  auto rot = [&](int d, int q) {
    const std::size_t k = static_cast<std::size_t>(d - 1) * n + q;
    u = testing::embed(testing::rotation(axes[k], th[k]), q, n) * u;
  };
  for (int d = 1; d <= depth; ++d) {
    std::vector<bool> used(n, false);
    for (auto [c, t] : layout_pairs(n, d)) {
      rot(d, c);
      rot(d, t);
      u = testing::cnot_dense(c, t, n) * u;
      used[c] = used[t] = true;
    }
    for (int q = 0; q < n; ++q)
      if (!used[q]) rot(d, q);
  }
  return u;
}

}  // namespace

TEST_CASE("state vector basics") {
  StateVector psi(3);
  CHECK(psi[0] == Complex(1.0));
  CHECK(psi.dim() == 8);
  CHECK_THROWS_AS(StateVector::from_amplitudes({1.0, 0.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(StateVector::from_amplitudes({0.0, 0.0}), Error);
  const StateVector b = StateVector::basis_state(3, 5);
  CHECK(b[5] == Complex(1.0));
  Rng rng(1);
  const StateVector h = StateVector::haar_random(5, rng);
  CHECK(h.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single-qubit gates act big-endian") {
  StateVector psi(3);
  psi.apply_1q(pauli_matrix(Axis::X), 0);
  CHECK(std::abs(psi[4] - Complex(1.0)) < 1e-15);
  psi.apply_cnot(0, 2);
  CHECK(std::abs(psi[5] - Complex(1.0)) < 1e-15);
}

TEST_CASE("ansatz matches a dense gate-product oracle") {
  Rng rng(7);
  for (int n : {2, 3, 4, 5}) {
    const int depth = 3;
    const BrickworkAnsatz ansatz = BrickworkAnsatz::with_random_axes(n, depth, rng);
    const auto th = testing::random_angles(ansatz.num_parameters(), rng);
    const StateVector psi0 = StateVector::haar_random(n, rng);
    const Eigen::VectorXcd want = dense_circuit(n, depth, ansatz.axes(), th) * testing::to_eigen(psi0);
    const Eigen::VectorXcd got = testing::to_eigen(apply_ansatz(ansatz, th, psi0));
    CHECK((want - got).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((circuit_unitary(ansatz, th) - dense_circuit(n, depth, ansatz.axes(), th)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("ansatz trivial cases") {
  Rng rng(2);
  const StateVector psi0 = StateVector::haar_random(4, rng);
  const BrickworkAnsatz empty = BrickworkAnsatz::with_uniform_axis(4, 0, Axis::Y);
  CHECK(max_abs_diff(apply_ansatz(empty, {}, psi0), psi0) == 0.0);
  const BrickworkAnsatz z = BrickworkAnsatz::with_uniform_axis(2, 1, Axis::Z);
  const std::vector<double> zero(2, 0.0);
  CHECK(std::abs(apply_ansatz(z, zero, StateVector(2))[0] - Complex(1.0)) < 1e-15);
  CHECK_THROWS_AS(apply_ansatz(z, std::vector<double>(3, 0.0), StateVector(2)), InvalidArgument);
}

TEST_CASE("brick pairs put the control on the lower index") {
  const auto p = brick_pairs(6, 1);
  REQUIRE(p.size() == 3);
  CHECK(p[2].control == 0);
  CHECK(p[2].target == 5);
  CHECK(brick_pairs(5, 2).size() == 2);
}

TEST_CASE("adjoint gradient matches finite differences") {
  Rng rng(11);
  const int n = 4;
  const BrickworkAnsatz ansatz = BrickworkAnsatz::with_random_axes(n, 4, rng);
  const auto th = testing::random_angles(ansatz.num_parameters(), rng);
  const StateVector psi0 = StateVector::haar_random(n, rng);
  const StateVector ref = StateVector::haar_random(n, rng);
  // f = |<ref|psi>|^2, covector df/d<psi| = <psi|ref> ref
  auto f = [&](const std::vector<double>& t) { return std::norm(ref.inner(apply_ansatz(ansatz, t, psi0))); };
  const StateVector out = apply_ansatz(ansatz, th, psi0);
  StateVector g = ref;
  const Complex ov = ref.inner(out);
  for (std::size_t i = 0; i < g.dim(); ++i) g[i] *= ov;
  const auto grad = adjoint_gradient(ansatz, th, out, g);
  const double h = 1e-6;
  for (std::size_t j = 0; j < th.size(); ++j) {
    auto tp = th, tm = th;
    tp[j] += h;
    tm[j] -= h;
    CHECK(grad[j] == doctest::Approx((f(tp) - f(tm)) / (2 * h)).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("reduced density matches index-summation oracle") {
  Rng rng(3);
  const int n = 6;
  const StateVector psi = StateVector::haar_random(n, rng);
  const Region region{1, 3};
  const auto rho = reduced_density(psi, region);
  rho.validate();
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(4, 4);
  for (std::uint64_t i = 0; i < 64; ++i)
    for (std::uint64_t j = 0; j < 64; ++j) {
      const int b1i = (i >> (n - 1 - 1)) & 1, b3i = (i >> (n - 1 - 3)) & 1;
      const int b1j = (j >> (n - 1 - 1)) & 1, b3j = (j >> (n - 1 - 3)) & 1;
      if ((i & ~((1ull << 4) | (1ull << 2))) != (j & ~((1ull << 4) | (1ull << 2)))) continue;
      want(2 * b1i + b3i, 2 * b1j + b3j) += psi[i] * std::conj(psi[j]);
    }
  CHECK((rho.mat - want).cwiseAbs().maxCoeff() < 1e-12);

  const auto bell = reduced_density(testing::ghz(2), Region{0});
  CHECK(std::abs(bell.mat(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(bell.mat(0, 1)) < 1e-15);
}

TEST_CASE("Renyi entropies of known spectra") {
  const std::vector<double> pure{1.0, 0.0}, mixed{0.25, 0.25, 0.25, 0.25}, s73{0.7, 0.3};
  for (double a : {0.0, 0.5, 1.0, 2.0, 3.0}) {
    CHECK(renyi_entropy_of_spectrum(pure, EntropyOrder(a)) == doctest::Approx(0.0));
    CHECK(renyi_entropy_of_spectrum(mixed, EntropyOrder(a)) == doctest::Approx(2 * std::numbers::ln2));
  }
  CHECK(renyi_entropy_of_spectrum(s73, EntropyOrder::von_neumann()) == doctest::Approx(0.6109).epsilon(1e-4));
  CHECK(renyi_entropy_of_spectrum(s73, EntropyOrder::collision()) == doctest::Approx(-std::log(0.58)));
  CHECK_THROWS(EntropyOrder(-1.0));
  const std::vector<double> bad{1.1, -0.1};
  CHECK_THROWS_AS(renyi_entropy_of_spectrum(bad, EntropyOrder(1.0)), InvalidState);
}

TEST_CASE("entanglement entropy symmetry and GHZ values") {
  Rng rng(5);
  const StateVector psi = StateVector::haar_random(7, rng);
  for (double a : {0.0, 0.5, 1.0, 2.0}) {
    const double sa = renyi_entropy(reduced_density(psi, Region{0, 2}), EntropyOrder(a));
    const double sb = renyi_entropy(reduced_density(psi, Region{1, 3, 4, 5, 6}), EntropyOrder(a));
    CHECK(sa == doctest::Approx(sb).epsilon(1e-9));
    CHECK(entanglement_entropy(psi, Region{0, 2}, EntropyOrder(a)) == doctest::Approx(sa).epsilon(1e-10));
  }
  const StateVector g4 = testing::ghz(4);
  CHECK(mutual_information(g4, Region{0}, Region{1}, EntropyOrder::von_neumann()) ==
        doctest::Approx(std::numbers::ln2));
  CHECK(tee_contiguous(testing::ghz(8), EntropyOrder::von_neumann()) ==
        doctest::Approx(std::numbers::ln2).epsilon(1e-10));
  CHECK_THROWS_AS(mutual_information(g4, Region{0, 1}, Region{1}, EntropyOrder(1.0)), InvalidArgument);
}

TEST_CASE("TEE of product states vanishes") {
  const StateVector p = StateVector::product_state(8, {Complex(0.6), Complex(0.0, 0.8)});
  for (double a : {0.0, 1.0, 2.0}) CHECK(std::abs(tee_contiguous(p, EntropyOrder(a))) < 1e-10);
}

TEST_CASE("contiguous TEE equals the explicit three-region TEE") {
  Rng rng(9);
  const StateVector psi = StateVector::haar_random(9, rng);
  const double t = tee(psi, Region{0, 1}, Region{2, 3}, Region{4, 5}, EntropyOrder(1.0));
  CHECK(tee_contiguous(psi, EntropyOrder(1.0)) == doctest::Approx(t).epsilon(1e-12));
}

TEST_CASE("Haar TEE is strongly negative at n=12") {
  Rng rng(12);
  double mean = 0.0;
  const int samples = 10;
  for (int s = 0; s < samples; ++s)
    mean += tee_contiguous(StateVector::haar_random(12, rng), EntropyOrder(1.0)) / samples;
  CHECK(mean < -0.5 * 12 * std::numbers::ln2 + 2.0);
  CHECK(mean > -0.5 * 12 * std::numbers::ln2 - 2.0);
}

TEST_CASE("QFT matches the dense DFT oracle") {
  Rng rng(4);
  const int n = 10;
  const StateVector psi = StateVector::haar_random(n, rng);
  const StateVector f = qft(psi);
  const std::size_t N = psi.dim();
  double worst = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < N; ++j)
      acc += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>((j * k) % N) / N) * psi[j];
    worst = std::max(worst, std::abs(acc / std::sqrt(double(N)) - f[k]));
  }
  CHECK(worst < 1e-10);
  CHECK(max_abs_diff(qft(f, true), psi) < 1e-10);
  const StateVector u = qft(StateVector(4));
  for (std::size_t k = 0; k < 16; ++k) CHECK(std::abs(u[k] - Complex(0.25)) < 1e-14);
}

TEST_CASE("Haar unitaries") {
  Rng rng(21);
  double mean = 0.0;
  const int samples = 10000;
  for (int s = 0; s < samples; ++s) {
    const Eigen::MatrixXcd u = haar_unitary(4, rng);
    if (s < 10) CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    mean += std::norm(u(0, 0)) / samples;
  }
  CHECK(mean == doctest::Approx(0.25).epsilon(0.08));
  Rng r1(5), r2(5), r3(6);
  CHECK(haar_unitary(4, r1) == haar_unitary(4, r2));
  CHECK(haar_unitary(4, r1) != haar_unitary(4, r3));
  for (const auto& b : haar_su4_layer(6, 1, r1)) {
    CHECK((b.adjoint() * b - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(b.determinant() - Complex(1.0)) < 1e-12);
  }
}

TEST_CASE("rotation gate error closed form") {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const BrickworkAnsatz a = BrickworkAnsatz::with_random_axes(2, 1, rng);
    std::vector<double> th = testing::random_angles(2, rng), pert = th;
    const double delta = uniform(rng, -1.0, 1.0);
    pert[1] += delta;
    CHECK(circuit_operator_distance(a, th, pert) == doctest::Approx(rotation_gate_error(delta)).epsilon(1e-10));
    CHECK(circuit_operator_distance(a, th, th) < 1e-14);
  }
  CHECK(rotation_gate_error(1.0) == doctest::Approx(2 * std::sin(0.25)));
}

TEST_CASE("seed derivation and parallel map are deterministic") {
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  const std::function<int(std::size_t)> sq = [](std::size_t i) { return int(i * i); };
  CHECK(parallel_map<int>(10, 1, sq) == parallel_map<int>(10, 3, sq));
  const std::function<int(std::size_t)> boom = [](std::size_t i) -> int {
    if (i >= 3) throw InvalidArgument("at " + std::to_string(i));
    return 0;
  };
  CHECK_THROWS_WITH(parallel_map<int>(8, 4, boom), "at 3");
}

TEST_CASE("fourth root of Y state") {
  const StateVector p = fourth_root_y_state(1);
  CHECK(p.norm() == doctest::Approx(1.0));
  // <Y> of Y^{1/4}|0>: Bloch vector rotated by pi/4 about y from +z gives <Z> = <X> = 1/sqrt2.
  const Complex z = std::norm(p[0]) - std::norm(p[1]);
  CHECK(z.real() == doctest::Approx(1 / std::sqrt(2.0)));
}
