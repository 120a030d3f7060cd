#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slopecount {

// Edge bitmask over the C(n,2) lexicographic edge slots of K_n.
// n is capped at 12, so up to 66 slots; 128 bits cover that.
using EdgeMask = unsigned __int128;

inline constexpr int kMaxVertices = 12;

constexpr int edge_slot_count(int n) { return n * (n - 1) / 2; }

// Slot of the unordered pair (i,j), 1-based vertices, i < j.
// Slot order: (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).
constexpr int edge_slot(int n, int i, int j) {
  if (i > j) { int t = i; i = j; j = t; }
  return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1);
}

std::pair<int, int> slot_to_edge(int n, int slot);

struct LabeledGraph {
  int n = 0;
  EdgeMask edges = 0;

  LabeledGraph() = default;
  explicit LabeledGraph(int n_vertices);

  bool has_edge(int i, int j) const {
    return (edges >> edge_slot(n, i, j)) & 1;
  }
  LabeledGraph& add_edge(int i, int j);
  LabeledGraph& remove_edge(int i, int j);
  int edge_count() const;
  std::vector<std::pair<int, int>> edge_list() const;

  bool operator==(const LabeledGraph&) const = default;
};

LabeledGraph complement(const LabeledGraph& g);
LabeledGraph intersect(const LabeledGraph& g, const LabeledGraph& h);

// Induced subgraph on U, relabeled to {1..|U|} preserving order.
LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& u);

bool is_connected(const LabeledGraph& g);
bool has_cycle(const LabeledGraph& g);

bool has_induced_p4(const LabeledGraph& g);
bool has_induced_c5(const LabeledGraph& g);

// P4-free test: negation of has_induced_p4.
bool is_cograph(const LabeledGraph& g);
// Independent implementation via the complement-reducibility recursion.
bool is_cograph_by_reduction(const LabeledGraph& g);

// 6-bit edge code of the induced subgraph on four vertices (local lex slots),
// and the labeled-pattern tables it indexes into.
int induced_code4(const LabeledGraph& g, int a, int b, int c, int d);
bool is_p4_code(int code);
bool is_claw_code(int code);

// Text format: "n:EdgeList", e.g. "5:12,23,34,45,15". Empty list: "5:".
LabeledGraph parse_graph(const std::string& text);
std::string format_graph(const LabeledGraph& g);

}  // namespace slopecount
