#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slopecount/graph.hpp"

namespace slopecount {

// Prime fields F_q, q in {2,3,5,7,11,13}.
bool is_supported_prime(int q);

inline int f_add(int x, int y, int q) { return (x + y) % q; }
inline int f_sub(int x, int y, int q) { return (x - y + q) % q; }
inline int f_mul(int x, int y, int q) { return (x * y) % q; }
int f_inv(int x, int q);

// A point a in F_q^C(n,2): one field element per edge slot of K_n.
struct EdgeWeighting {
  int n = 0;
  int q = 2;
  std::vector<std::uint8_t> values;  // length C(n,2), each in [0,q)

  EdgeWeighting() = default;
  EdgeWeighting(int n_vertices, int modulus);

  int slot_count() const { return edge_slot_count(n); }
  int at(int i, int j) const { return values[edge_slot(n, i, j)]; }
  void set(int i, int j, int v) {
    values[edge_slot(n, i, j)] = static_cast<std::uint8_t>(v % q);
  }

  bool operator==(const EdgeWeighting&) const = default;
};

// q=2 only: the graph G_a with edge ij iff a_ij = 1.
LabeledGraph weighting_to_graph(const EdgeWeighting& a);
EdgeWeighting graph_to_weighting(const LabeledGraph& g);

// q=2 only: flip every coordinate.
EdgeWeighting complement_weighting(const EdgeWeighting& a);

// Level graph at alpha: edges where a_e = alpha. Any q.
LabeledGraph weight_induced_subgraph(const EdgeWeighting& a, int alpha);

// Weakly decreasing occurrence counts of the values present in a.
using TypePartition = std::vector<int>;
TypePartition classify_type(const EdgeWeighting& a);
std::string format_type(const TypePartition& t);

// Text format "q:n:digits", base-q digits in slot order, most significant
// digit = slot (1,2). For q=2 a hex alternative "2:n:0x..." is accepted.
EdgeWeighting parse_point(const std::string& text);
std::string format_point(const EdgeWeighting& a);

}  // namespace slopecount
