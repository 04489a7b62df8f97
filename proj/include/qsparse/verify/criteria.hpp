#pragma once

#include <string>
#include <vector>

#include "qsparse/mincut/circuit_graph.hpp"

namespace qsparse::verify {

struct VerifyOptions {
  int threads = 1;
};

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  std::vector<std::string> warnings;  ///< advisory clauses that did not hold
  double seconds = 0.0;
};

/// Ids with a library check here (1..11); reproducibility of the CLI is checked by its caller.
const std::vector<int>& library_criteria();
/// Criteria with neither long optimizations nor stochastic clauses (1..8).
const std::vector<int>& deterministic_criteria();

CriterionResult run_criterion(int id, const VerifyOptions& options);

/// "[PASS] 3 min-cut plateau and saturation: detail" (+ warnings).
std::string format_line(const CriterionResult& r);

/// Minimum cut by exhaustive edge-subset search: the fewest world-line
/// segments whose removal leaves no path between a region output and a
/// non-region output. Independent of the max-flow solver; needs <= 20 edges.
int enumerate_min_cut(const mincut::CircuitGraph& graph, std::uint64_t region_outputs);

}  // namespace qsparse::verify
