#include <doctest.h>

#include <numbers>

#include "qsparse/core/errors.hpp"
#include "qsparse/core/random.hpp"
#include "qsparse/mincut/circuit_graph.hpp"
#include "qsparse/verify/criteria.hpp"

using namespace qsparse;
using namespace qsparse::mincut;

TEST_CASE("circuit graph counts") {
  const CircuitGraph g0(6, 0);
  CHECK(g0.num_gates() == 0);
  CHECK(g0.edges().size() == 6);
  const CircuitGraph g1(4, 1);
  CHECK(g1.num_gates() == 2);
  CHECK(g1.edges().size() == 8);
  const CircuitGraph g(8, 4);
  CHECK(g.num_gates() == 8 * 4 / 2);
  CHECK(g.num_nodes() == 2 * 8 + 16);
  CHECK(g.edges().size() == std::size_t(8 + 2 * 16));
}

TEST_CASE("depth zero has no entanglement") {
  const CircuitGraph g(8, 0);
  CHECK(hartley_entropy(g, Region{0, 3, 5}).value == 0);
}

TEST_CASE("max-flow matches edge enumeration") {
  Rng rng(13);
  for (auto [n, d] : {std::pair{4, 1}, {4, 2}, {4, 3}, {6, 1}, {6, 2}, {8, 1}}) {
    const CircuitGraph g(n, d);
    MinCutSolver solver(g);
    for (std::uint64_t m = 1; m + 1 < (1ull << n); ++m) {
      std::vector<bool> mem(n);
      for (int q = 0; q < n; ++q) mem[q] = (m >> q) & 1;
      const int got = solver.hartley_entropy(mem).value;
      CHECK(got == verify::enumerate_min_cut(g, m));
      CHECK(got <= std::min(std::popcount(m), n - std::popcount(m)));
    }
  }
}

TEST_CASE("brick straddling count at depth one") {
  // n=8, D=1 pairs (1,2),(3,4),(5,6),(7,0): A={0,1} is cut by the bricks on (1,2) and (7,0).
  const CircuitGraph g(8, 1);
  CHECK(hartley_entropy(g, Region{0, 1}).value == 2);
  CHECK(hartley_entropy(g, Region{1, 2}).value == 0);
}

TEST_CASE("Hartley TEE plateau and saturation") {
  for (int n : {16, 32, 64}) {
    const auto cuts = hartley_tee_cuts_sweep(n, n / 2);
    for (int d = 0; d <= n / 2; ++d) {
      if (d <= n / 8) CHECK(cuts[d] == 0);
      if (d >= n / 4) CHECK(cuts[d] == -n / 2);
      if (d > 0) CHECK(cuts[d] <= cuts[d - 1]);
      CHECK(cuts[d] == hartley_tee_cuts(n, d));
    }
  }
  CHECK(hartley_tee(16, 4) == doctest::Approx(-8 * std::numbers::ln2));
}

TEST_CASE("incremental resume matches fresh solves") {
  const int n = 12;
  const CircuitGraph g(n, 6);
  MinCutSolver solver(g);
  std::vector<bool> mem(n, false);
  for (int q = 2; q < 7; ++q) mem[q] = true;
  auto flow = solver.start(mem);
  for (int d = 2; d <= 6; d += 2) {
    const int v = solver.resume(flow, d);
    MinCutSolver fresh(CircuitGraph(n, d));
    CHECK(v == fresh.hartley_entropy(mem).value);
  }
}
