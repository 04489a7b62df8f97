#include <doctest.h>

#include <numbers>
#include <set>

#include "helpers.hpp"
#include "qsparse/core/entropy.hpp"
#include "qsparse/core/errors.hpp"
#include "qsparse/ham/hamiltonian.hpp"
#include "qsparse/vqa/cost.hpp"
#include "qsparse/vqa/experiments.hpp"
#include "qsparse/vqa/gradients.hpp"
#include "qsparse/vqa/omega.hpp"
#include "qsparse/vqa/optimizer.hpp"

using namespace qsparse;
using namespace qsparse::vqa;

namespace {

// Disjoint unordered {B, C} block pairs plus every A, found by brute force over a cycle.
std::size_t brute_force_contiguous(int n, int s) {
  std::set<std::tuple<int, int, int>> seen;
  auto block = [&](int start) {
    std::uint64_t m = 0;
    for (int j = 0; j < s; ++j) m |= 1ull << ((start + j) % n);
    return m;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto ma = block(a), mb = block(b), mc = block(c);
        if ((ma & mb) || (ma & mc) || (mb & mc)) continue;
        seen.insert({a, std::min(b, c), std::max(b, c)});
      }
  return seen.size();
}

std::size_t brute_force_lshape(const ham::LatticeSpec& l) {
  std::size_t count = 0;
  const int n = l.num_sites();
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      for (int c = a + 1; c < n; ++c) {
        if (a == b || c == b || !l.adjacent(a, b) || !l.adjacent(b, c)) continue;
        const int ax = a % l.lx, ay = a / l.lx, cx = c % l.lx, cy = c / l.lx;
        if (ax != cx && ay != cy) ++count;
      }
  return count;
}

}  // namespace

TEST_CASE("contiguous triplet sets") {
  const OmegaSet six = build_omega_contiguous(6, 2);
  for (const auto& t : six.triplets()) {
    CHECK_FALSE(t.a.overlaps(t.b));
    CHECK_FALSE(t.b.overlaps(t.c));
    CHECK_FALSE(t.a.overlaps(t.c));
  }
  CHECK(six.size() == brute_force_contiguous(6, 2));
  CHECK(build_omega_contiguous(9, 2).size() == brute_force_contiguous(9, 2));
  CHECK(build_omega_contiguous(10, 3).size() == brute_force_contiguous(10, 3));
  CHECK_THROWS_AS(build_omega_contiguous(5, 2), InvalidArgument);
}

TEST_CASE("L-shaped triplet sets") {
  CHECK(build_omega_lshape({2, 2}).size() == 4);
  CHECK(build_omega_lshape({3, 3}).size() == brute_force_lshape({3, 3}));
  CHECK(build_omega_lshape({4, 3}).size() == brute_force_lshape({4, 3}));
  CHECK_THROWS(build_omega_lshape({3, 1}));
  CHECK_THROWS(OmegaSet({{Region{0}, Region{0}, Region{1}}}));
}

TEST_CASE("C_TEE values") {
  const StateVector prod = StateVector::product_state(6, {Complex(0.3), Complex(0.1, 0.9)});
  CHECK(c_tee(prod, build_omega_contiguous(6, 1)) < 1e-12);
  CHECK(c_tee(testing::ghz(6), build_omega_contiguous(6, 1)) == doctest::Approx(std::numbers::ln2));
  Rng rng(5);
  const StateVector haar = StateVector::haar_random(9, rng);
  const OmegaSet om = build_omega_contiguous(9, 2);
  double direct = 0.0;
  for (const auto& t : om.triplets())
    direct += std::abs(tee(haar, t.a, t.b, t.c, EntropyOrder::collision())) / om.size();
  CHECK(c_tee(haar, om) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(c_tee(haar, om) > 0.1);
}

TEST_CASE("regularizer schedule") {
  RegularizerConfig r{build_omega_contiguous(6, 1), 0.1, 0.5};
  CHECK(r.gamma(3) == doctest::Approx(0.0125));
  CHECK(r.gamma(2000) == 0.0);
  CHECK_THROWS(RegularizerConfig{std::nullopt, 0.1, 0.5}.validate());
}

TEST_CASE("evaluation composes cost and regularizer") {
  Rng rng(6);
  const int n = 6;
  BrickworkAnsatz a = BrickworkAnsatz::with_random_axes(n, 5, rng);
  const auto th = testing::random_angles(a.num_parameters(), rng);
  const ham::Hamiltonian h = ham::build_af2dnnh({3, 2}, 1.0, 1.0);
  const OmegaSet om = build_omega_contiguous(n, 1);
  const VariationalProblem p(a, fourth_root_y_state(n), EnergyCost{h}, {om, 0.1, 0.5});
  const Evaluation e = p.evaluate(th, 3, true);
  const StateVector psi = apply_ansatz(a, th, fourth_root_y_state(n));
  CHECK(e.cost == doctest::Approx(ham::expectation(psi, h)).epsilon(1e-12));
  CHECK(e.c_tee == doctest::Approx(c_tee(psi, om)).epsilon(1e-12));
  CHECK(e.total == doctest::Approx(e.cost + 0.0125 * e.c_tee).epsilon(1e-12));
  const VariationalProblem bare(a, fourth_root_y_state(n), EnergyCost{h}, {});
  CHECK(bare.evaluate(th, 0, false).total == doctest::Approx(e.cost).epsilon(1e-12));

  // adjoint gradient of the total against central differences
  const auto fd = central_difference([&](const std::vector<double>& t) { return regularized_cost(p, t, 3); }, th);
  for (std::size_t j = 0; j < th.size(); ++j) CHECK(e.gradient[j] == doctest::Approx(fd[j]).epsilon(1e-6).scale(1));
}

TEST_CASE("parameter-shift gradients") {
  Rng rng(31);
  const int n = 6;
  const BrickworkAnsatz a = BrickworkAnsatz::with_random_axes(n, 6, rng);
  const auto th = testing::random_angles(a.num_parameters(), rng);
  const StateVector psi0 = fourth_root_y_state(n);
  const Region region{1, 2};
  for (std::size_t j : {0ul, 7ul, 20ul, 35ul}) {
    const double ps = grad_s2_parameter_shift(a, th, psi0, region, j);
    auto s2 = [&](const std::vector<double>& t) {
      return entanglement_entropy(apply_ansatz(a, t, psi0), region, EntropyOrder::collision());
    };
    const double fd = (s2(shifted(th, j, 1e-5)) - s2(shifted(th, j, -1e-5))) / 2e-5;
    CHECK(ps == doctest::Approx(fd).epsilon(1e-6).scale(1));
  }
  // a first-layer rotation on qubit 5 cannot reach qubit 0 in one layer
  const BrickworkAnsatz shallow = BrickworkAnsatz::with_random_axes(n, 1, rng);
  const auto t1 = testing::random_angles(n, rng);
  CHECK(std::abs(grad_s2_parameter_shift(shallow, t1, psi0, Region{2}, 4)) < 1e-10);

  const OmegaSet om = build_omega_contiguous(n, 1);
  const auto ps = grad_c_tee_parameter_shift(a, th, psi0, om);
  const auto adj = c_tee_with_covector(apply_ansatz(a, th, psi0), om);
  const auto g = adjoint_gradient(a, th, apply_ansatz(a, th, psi0), adj.covector);
  for (std::size_t j = 0; j < th.size(); ++j) CHECK(g[j] == doctest::Approx(ps[j]).epsilon(1e-8).scale(1));
}

TEST_CASE("tee-only fixed point") {
  const int n = 6;
  const BrickworkAnsatz a = BrickworkAnsatz::with_uniform_axis(n, 4, Axis::Z);
  const VariationalProblem p(a, StateVector(n), TeeOnlyCost{}, {build_omega_contiguous(n, 1), 1.0, 1.0});
  OptimizerConfig oc;
  oc.kind = OptimizerConfig::Kind::AdamW;
  oc.steps = 20;
  const RunRecord r = optimize(p, std::vector<double>(a.num_parameters(), 0.0), oc, 1);
  for (const auto& s : r.steps) {
    CHECK(s.c_tee < 1e-14);
    CHECK(s.gradient_norm < 1e-12);
  }
}

TEST_CASE("optimizers converge on a quadratic") {
  const std::vector<double> centre{1.0, -2.0, 0.5, 3.0};
  const std::vector<double> scale{1.0, 4.0, 0.5, 2.0};
  const Objective quad = [&](std::span<const double> x, int, bool grad) {
    Evaluation e;
    for (std::size_t i = 0; i < x.size(); ++i) {
      e.cost += 0.5 * scale[i] * (x[i] - centre[i]) * (x[i] - centre[i]);
      if (grad) e.gradient.push_back(scale[i] * (x[i] - centre[i]));
    }
    e.total = e.cost;
    return e;
  };
  for (auto kind : {OptimizerConfig::Kind::AdamW, OptimizerConfig::Kind::Cg}) {
    OptimizerConfig oc;
    oc.kind = kind;
    oc.steps = 500;
    oc.adamw.learning_rate = 0.05;
    oc.adamw.weight_decay = 0.0;
    const RunRecord r = optimize(quad, std::vector<double>(4, 0.0), oc);
    INFO(optimizer_name(kind));
    CHECK(r.steps.back().cost < 1e-8);
    CHECK_FALSE(r.aborted);
  }
}

TEST_CASE("non-finite objective aborts with a diagnostic") {
  const Objective bad = [](std::span<const double> x, int, bool grad) {
    Evaluation e;
    e.cost = e.total = x[0] > 0.05 ? NAN : -x[0];
    if (grad) e.gradient = {-1.0};
    return e;
  };
  OptimizerConfig oc;
  oc.kind = OptimizerConfig::Kind::AdamW;
  oc.adamw.learning_rate = 0.1;
  const RunRecord r = optimize(bad, {0.0}, oc);
  CHECK(r.aborted);
  CHECK_FALSE(r.diagnostic.empty());
}

TEST_CASE("optimizer config validation") {
  OptimizerConfig oc;
  oc.steps = -1;
  CHECK_THROWS(oc.validate());
  CHECK(parse_optimizer("adamw") == OptimizerConfig::Kind::AdamW);
  CHECK_THROWS(parse_optimizer("lbfgs"));
}

TEST_CASE("paired trajectories are reproducible and thread independent") {
  OptimizerConfig oc;
  oc.steps = 5;
  PairedSpec spec{6, 8, 2, 3, 42, 0.1, 0.5, oc};
  Rng rng(1);
  const StateVector target = StateVector::haar_random(6, rng);
  const auto r1 = run_paired_trajectories(spec, InfidelityCost{target}, build_omega_contiguous(6, 1), 1);
  const auto r2 = run_paired_trajectories(spec, InfidelityCost{target}, build_omega_contiguous(6, 1), 3);
  REQUIRE(r1.size() == 6);
  for (std::size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].record.final_theta == r2[i].record.final_theta);
    CHECK(r1[i].seed == r2[i].seed);
  }
  CHECK(r1[0].seed == r1[1].seed);
  CHECK(r1[0].record.steps[0].cost == r1[1].record.steps[0].cost);

  // gamma0 = 0 makes both arms the same computation
  spec.gamma0 = 0.0;
  const auto r0 = run_paired_trajectories(spec, InfidelityCost{target}, build_omega_contiguous(6, 1), 1);
  CHECK(r0[0].record.final_theta == r0[1].record.final_theta);
}

TEST_CASE("head-random starts") {
  const auto s = trajectory_start(6, 10, 3, 99);
  CHECK(s.theta0.size() == 60);
  for (std::size_t k = 18; k < 60; ++k) CHECK(s.theta0[k] == 0.0);
  for (std::size_t k = 0; k < 18; ++k) CHECK((s.theta0[k] >= 0.0 && s.theta0[k] < 2 * std::numbers::pi));
}

TEST_CASE("gradient variance vanishes for shallow circuits") {
  const auto rows = variance_of_tee_gradient(8, {1, 4, 6}, 8, 3);
  CHECK(rows[0].variance < 1e-20);
  CHECK(rows[2].variance > 1e-8);
}

TEST_CASE("minimum parameters for small targets") {
  MinParamsConfig mc;
  mc.max_layers = 4;
  mc.random_restarts = 2;
  mc.optimizer.steps = 300;
  const auto flat = [](int n) { return enc::GridFunction(n, std::vector<double>(std::size_t{1} << n, 1.0)); };
  const auto rows = min_params_for_infidelity(flat, {1e-10}, {2, 3}, mc);
  CHECK(rows[0].parameters <= 4);
  CHECK(rows[0].best_infidelity <= 1e-10);
  CHECK(rows[1].parameters == 3);
}
