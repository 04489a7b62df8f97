#pragma once

#include <vector>

#include "qsparse/core/region.hpp"

namespace qsparse::mincut {

/// World-line graph of an n-qubit periodic brickwork circuit of depth D with
/// the same pairing as BrickworkAnsatz. Nodes 0..n-1 are input terminals,
/// n..2n-1 output terminals, then one node per two-qubit gate. Every edge is a
/// world-line segment of capacity 1.
class CircuitGraph {
 public:
  struct Edge {
    int u;
    int v;
  };

  CircuitGraph(int num_qubits, int depth);

  int num_qubits() const { return n_; }
  int depth() const { return depth_; }
  int num_nodes() const { return 2 * n_ + num_gates_; }
  int num_gates() const { return num_gates_; }
  int input_node(int qubit) const { return qubit; }
  int output_node(int qubit) const { return n_ + qubit; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Brick layer (1-based) of a gate node; 0 for terminals.
  int layer_of(int node) const;
  /// Node sequence of qubit q from its input to its output terminal.
  std::vector<int> world_line(int qubit) const;

 private:
  int n_;
  int depth_;
  int num_gates_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> lines_;
  std::vector<int> gate_layer_;
};

struct CutResult {
  int value;       ///< number of cut world-line segments
  double entropy;  ///< value * ln 2
};

/// Minimum number of edges separating the outputs in a region from the other
/// outputs; input terminals are unconstrained. Computed by max-flow (Dinic).
///
/// Besides one-shot queries the solver supports depth sweeps: restricting the
/// graph to its top L layers (gates below are removed, leaving free world-line
/// ends) yields the circuit graph of depth L when L has the parity of the full
/// depth. A maximum flow for L stays feasible for L + 2, so a Flow can be
/// resumed layer by layer.
class MinCutSolver {
 public:
  explicit MinCutSolver(const CircuitGraph& graph);

  CutResult hartley_entropy(const Region& region);
  /// membership[q] marks output q as part of the region.
  CutResult hartley_entropy(const std::vector<bool>& membership);

  struct Flow {
    std::vector<int> residual;
    int value = 0;
  };
  /// Zero flow with terminal arcs set for the region.
  Flow start(const std::vector<bool>& membership) const;
  /// Augments `flow` to a maximum flow on the top `layers` layers; `layers`
  /// must not decrease between calls on the same Flow.
  int resume(Flow& flow, int layers);

 private:
  bool build_levels(const std::vector<int>& cap);
  int augment(std::vector<int>& cap);
  void set_active_layers(int layers);

  int n_;
  int depth_;
  int source_;
  int sink_;
  // CSR adjacency; arc a and a^1 are each other's reverse.
  std::vector<int> first_arc_;
  std::vector<int> arc_ids_;
  std::vector<int> head_;
  std::vector<int> base_cap_;
  std::vector<int> source_arc_;  // per qubit: arc S -> out_q
  std::vector<int> sink_arc_;    // per qubit: arc out_q -> T
  std::vector<int> node_layer_;  // gate layer, 0 for outputs/source/sink, -1 for inputs
  std::vector<char> blocked_;
  int active_layers_ = -1;
  std::vector<int> level_;
  std::vector<int> next_;
  std::vector<int> queue_;
  std::vector<int> path_;
};

/// hartley_entropy on a fresh graph.
CutResult hartley_entropy(const CircuitGraph& graph, const Region& region);

/// I^(0)(A:B) = S(A) + S(B) - S(A u B) in nats.
double hartley_mutual_information(const CircuitGraph& graph, const Region& a, const Region& b);

/// Contiguous quarters of size m = n/4 starting at qubit `offset`:
/// A = [o, o+m), B = [o+m, o+2m), C = [o+2m, o+3m) on the periodic chain.
/// The default offset 1 aligns A's left edge with a first-layer brick.
struct Quarters {
  Region a, b, c;
};
Quarters contiguous_quarters(int num_qubits, int offset = 1);

/// Tripartite information of the quarters in units of cut edges
/// (S_A + S_B + S_C - S_AB - S_AC - S_BC + S_ABC). Requires n % 4 == 0.
int hartley_tee_cuts(int num_qubits, int depth, int offset = 1);

/// hartley_tee_cuts for every depth 0..max_depth, using warm-started flows.
std::vector<int> hartley_tee_cuts_sweep(int num_qubits, int max_depth, int offset = 1);

/// hartley_tee_cuts * ln 2.
double hartley_tee(int num_qubits, int depth, int offset = 1);

}  // namespace qsparse::mincut
