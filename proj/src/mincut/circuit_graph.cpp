#include "qsparse/mincut/circuit_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "qsparse/core/ansatz.hpp"
#include "qsparse/core/errors.hpp"

namespace qsparse::mincut {

namespace {
constexpr int kInf = std::numeric_limits<int>::max() / 4;
}

CircuitGraph::CircuitGraph(int num_qubits, int depth) : n_(num_qubits), depth_(depth) {
  require(num_qubits >= 4 && num_qubits % 2 == 0, "circuit graph needs an even n >= 4");
  require(depth >= 0, "depth must be non-negative");
  lines_.assign(n_, {});
  std::vector<int> last(n_);
  for (int q = 0; q < n_; ++q) {
    last[q] = input_node(q);
    lines_[q].push_back(last[q]);
  }
  int next_node = 2 * n_;
  for (int d = 1; d <= depth; ++d) {
    for (const BrickPair& p : brick_pairs(n_, d)) {
      const int g = next_node++;
      gate_layer_.push_back(d);
      for (int q : {p.control, p.target}) {
        edges_.push_back({last[q], g});
        last[q] = g;
        lines_[q].push_back(g);
      }
    }
  }
  num_gates_ = next_node - 2 * n_;
  for (int q = 0; q < n_; ++q) {
    edges_.push_back({last[q], output_node(q)});
    lines_[q].push_back(output_node(q));
  }
}

std::vector<int> CircuitGraph::world_line(int qubit) const {
  require(qubit >= 0 && qubit < n_, "qubit out of range");
  return lines_[qubit];
}

int CircuitGraph::layer_of(int node) const {
  require(node >= 0 && node < num_nodes(), "node out of range");
  return node < 2 * n_ ? 0 : gate_layer_[node - 2 * n_];
}

MinCutSolver::MinCutSolver(const CircuitGraph& graph) : n_(graph.num_qubits()), depth_(graph.depth()) {
  source_ = graph.num_nodes();
  sink_ = source_ + 1;
  const int num_nodes = source_ + 2;
  std::vector<std::pair<int, int>> arcs;  // (tail, head) in pair order
  auto add_pair = [&](int u, int v, int cap_uv, int cap_vu) {
    arcs.emplace_back(u, v);
    base_cap_.push_back(cap_uv);
    arcs.emplace_back(v, u);
    base_cap_.push_back(cap_vu);
  };
  for (const auto& e : graph.edges()) add_pair(e.u, e.v, 1, 1);
  for (int q = 0; q < n_; ++q) {
    source_arc_.push_back(static_cast<int>(arcs.size()));
    add_pair(source_, graph.output_node(q), 0, 0);
    sink_arc_.push_back(static_cast<int>(arcs.size()));
    add_pair(graph.output_node(q), sink_, 0, 0);
  }
  head_.resize(arcs.size());
  first_arc_.assign(num_nodes + 1, 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    head_[i] = arcs[i].second;
    ++first_arc_[arcs[i].first + 1];
  }
  for (int v = 0; v < num_nodes; ++v) first_arc_[v + 1] += first_arc_[v];
  arc_ids_.resize(arcs.size());
  std::vector<int> fill(first_arc_.begin(), first_arc_.end() - 1);
  for (std::size_t i = 0; i < arcs.size(); ++i) arc_ids_[fill[arcs[i].first]++] = static_cast<int>(i);

  node_layer_.assign(num_nodes, 0);
  for (int q = 0; q < n_; ++q) node_layer_[graph.input_node(q)] = -1;
  for (int v = 2 * n_; v < graph.num_nodes(); ++v) node_layer_[v] = graph.layer_of(v);
  blocked_.assign(num_nodes, 0);
  level_.resize(num_nodes);
  next_.resize(num_nodes);
  queue_.resize(num_nodes);
}

void MinCutSolver::set_active_layers(int layers) {
  if (layers == active_layers_) return;
  active_layers_ = layers;
  const int lowest = depth_ - layers + 1;
  for (std::size_t v = 0; v < blocked_.size(); ++v) {
    const int l = node_layer_[v];
    blocked_[v] = l == -1 ? (layers < depth_) : (l > 0 && l < lowest);
  }
}

bool MinCutSolver::build_levels(const std::vector<int>& cap) {
  std::fill(level_.begin(), level_.end(), -1);
  int qh = 0, qt = 0;
  level_[source_] = 0;
  queue_[qt++] = source_;
  while (qh < qt) {
    const int v = queue_[qh++];
    // Nodes at or beyond the sink's level cannot lie on a shortest path.
    if (level_[sink_] >= 0 && level_[v] >= level_[sink_]) break;
    for (int k = first_arc_[v]; k < first_arc_[v + 1]; ++k) {
      const int id = arc_ids_[k];
      const int w = head_[id];
      if (cap[id] > 0 && level_[w] < 0 && !blocked_[w]) {
        level_[w] = level_[v] + 1;
        queue_[qt++] = w;
      }
    }
  }
  return level_[sink_] >= 0;
}

// One augmenting path in the level graph (iterative DFS); returns its bottleneck.
int MinCutSolver::augment(std::vector<int>& cap) {
  path_.clear();
  int v = source_;
  while (true) {
    if (v == sink_) {
      int pushed = kInf;
      for (int id : path_) pushed = std::min(pushed, cap[id]);
      for (int id : path_) {
        cap[id] -= pushed;
        cap[id ^ 1] += pushed;
      }
      return pushed;
    }
    bool advanced = false;
    for (int& k = next_[v]; k < first_arc_[v + 1]; ++k) {
      const int id = arc_ids_[k];
      const int w = head_[id];
      if (cap[id] > 0 && level_[w] == level_[v] + 1) {
        path_.push_back(id);
        v = w;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    // Dead end: prune v and retreat.
    level_[v] = -1;
    if (path_.empty()) return 0;
    const int id = path_.back();
    path_.pop_back();
    v = head_[id ^ 1];
    ++next_[v];
  }
}

MinCutSolver::Flow MinCutSolver::start(const std::vector<bool>& membership) const {
  require(membership.size() == static_cast<std::size_t>(n_), "membership size must equal the qubit count");
  const auto members = std::count(membership.begin(), membership.end(), true);
  if (members == 0 || members == n_) throw InvalidArgument("region must be a proper nonempty subset");
  Flow flow{base_cap_, 0};
  for (int q = 0; q < n_; ++q) {
    if (membership[q]) {
      flow.residual[source_arc_[q]] = kInf;
    } else {
      flow.residual[sink_arc_[q]] = kInf;
    }
  }
  return flow;
}

int MinCutSolver::resume(Flow& flow, int layers) {
  require(layers >= 0 && layers <= depth_, "active layer count out of range");
  set_active_layers(layers);
  while (build_levels(flow.residual)) {
    for (std::size_t v = 0; v < next_.size(); ++v) next_[v] = first_arc_[v];
    while (const int f = augment(flow.residual)) flow.value += f;
  }
  return flow.value;
}

CutResult MinCutSolver::hartley_entropy(const std::vector<bool>& membership) {
  Flow flow = start(membership);
  const int value = resume(flow, depth_);
  return CutResult{value, value * std::numbers::ln2};
}

CutResult MinCutSolver::hartley_entropy(const Region& region) {
  region.validate(n_);
  std::vector<bool> membership(n_, false);
  for (int q : region.qubits()) membership[q] = true;
  return hartley_entropy(membership);
}

CutResult hartley_entropy(const CircuitGraph& graph, const Region& region) {
  MinCutSolver solver(graph);
  return solver.hartley_entropy(region);
}

double hartley_mutual_information(const CircuitGraph& graph, const Region& a, const Region& b) {
  require(!a.overlaps(b), "mutual information needs disjoint regions");
  MinCutSolver solver(graph);
  const Region ab = a.united(b);
  const int s_ab = ab.size() == graph.num_qubits() ? 0 : solver.hartley_entropy(ab).value;
  return (solver.hartley_entropy(a).value + solver.hartley_entropy(b).value - s_ab) * std::numbers::ln2;
}

Quarters contiguous_quarters(int num_qubits, int offset) {
  require(num_qubits >= 4 && num_qubits % 4 == 0, "contiguous quarters need n divisible by 4");
  const int m = num_qubits / 4;
  const int o = ((offset % num_qubits) + num_qubits) % num_qubits;
  return Quarters{Region::periodic_block(o, m, num_qubits), Region::periodic_block(o + m, m, num_qubits),
                  Region::periodic_block(o + 2 * m, m, num_qubits)};
}

namespace {

// Memberships of A, B, C, AB, AC, BC, ABC with the inclusion-exclusion signs.
std::vector<std::pair<std::vector<bool>, int>> tee_terms(int num_qubits, int offset) {
  const Quarters qs = contiguous_quarters(num_qubits, offset);
  const Region* parts[3] = {&qs.a, &qs.b, &qs.c};
  std::vector<std::pair<std::vector<bool>, int>> terms;
  for (int subset = 1; subset < 8; ++subset) {
    std::vector<bool> membership(num_qubits, false);
    int size = 0;
    for (int j = 0; j < 3; ++j) {
      if (!(subset >> j & 1)) continue;
      ++size;
      for (int q : parts[j]->qubits()) membership[q] = true;
    }
    terms.emplace_back(std::move(membership), size == 2 ? -1 : 1);
  }
  return terms;
}

}  // namespace

int hartley_tee_cuts(int num_qubits, int depth, int offset) {
  const auto terms = tee_terms(num_qubits, offset);
  MinCutSolver solver(CircuitGraph(num_qubits, depth));
  int total = 0;
  for (const auto& [membership, sign] : terms) total += sign * solver.hartley_entropy(membership).value;
  return total;
}

std::vector<int> hartley_tee_cuts_sweep(int num_qubits, int max_depth, int offset) {
  require(max_depth >= 0, "depth must be non-negative");
  const auto terms = tee_terms(num_qubits, offset);
  std::vector<int> out(max_depth + 1, 0);
  // Depths of equal parity share one graph; D is its top D layers.
  for (int top = max_depth; top >= std::max(max_depth - 1, 0); --top) {
    MinCutSolver solver(CircuitGraph(num_qubits, top));
    std::vector<MinCutSolver::Flow> flows;
    for (const auto& term : terms) flows.push_back(solver.start(term.first));
    for (int d = top % 2; d <= top; d += 2) {
      int total = 0;
      for (std::size_t t = 0; t < terms.size(); ++t) total += terms[t].second * solver.resume(flows[t], d);
      out[d] = total;
    }
  }
  return out;
}

double hartley_tee(int num_qubits, int depth, int offset) {
  return hartley_tee_cuts(num_qubits, depth, offset) * std::numbers::ln2;
}

}  // namespace qsparse::mincut
