#include "slopecount/switching.hpp"

#include <stdexcept>

namespace slopecount {

LabeledGraph switch_graph_mask(const LabeledGraph& g, unsigned x_mask) {
  if (x_mask >> (g.n - 1))
    throw std::invalid_argument("X must be a subset of {1..n}");
  LabeledGraph out(g.n);
  out.edges = g.edges;
  int d = edge_slot_count(g.n);
  for (int s = 0; s < d; ++s) {
    auto [i, j] = slot_to_edge(g.n, s);
    bool in_i = (x_mask >> (i - 1)) & 1;
    bool in_j = j < g.n ? ((x_mask >> (j - 1)) & 1) : false;
    if (in_i != in_j) out.edges ^= EdgeMask{1} << s;
  }
  return out;
}

LabeledGraph switch_graph(const LabeledGraph& g, const std::vector<int>& x) {
  unsigned mask = 0;
  for (int v : x) {
    if (v < 1 || v >= g.n)
      throw std::invalid_argument("X must be a subset of {1..n}");
    mask |= 1u << (v - 1);
  }
  return switch_graph_mask(g, mask);
}

SwitchingClass canonical_representative(const LabeledGraph& g) {
  unsigned neighbors = 0;
  for (int v = 1; v < g.n; ++v)
    if (g.has_edge(v, g.n)) neighbors |= 1u << (v - 1);
  return SwitchingClass{switch_graph_mask(g, neighbors)};
}

bool orbit_has_induced_c5(const SwitchingClass& c) {
  const LabeledGraph& rep = c.representative;
  std::vector<int> inner(rep.n - 1);
  for (int v = 1; v < rep.n; ++v) inner[v - 1] = v;
  return has_induced_p4(induced_subgraph(rep, inner));
}

bool orbit_has_induced_c5_oracle(const SwitchingClass& c) {
  const LabeledGraph& rep = c.representative;
  int n = rep.n - 1;
  for (unsigned x = 0; x < (1u << n); ++x)
    if (has_induced_c5(switch_graph_mask(rep, x))) return true;
  return false;
}

SwitchingClass cograph_to_class(const LabeledGraph& g) {
  LabeledGraph ext(g.n + 1);
  for (auto [i, j] : g.edge_list()) ext.add_edge(i, j);
  return SwitchingClass{ext};
}

std::uint64_t count_c5free_classes(int n_plus_1) {
  if (n_plus_1 < 1 || n_plus_1 > 7)
    throw std::invalid_argument("orbit scans supported for n+1 <= 7");
  if (n_plus_1 == 1) return 1;
  int n = n_plus_1 - 1;
  int d = edge_slot_count(n);
  std::uint64_t count = 0;
  for (EdgeMask m = 0; m < (EdgeMask{1} << d); ++m) {
    LabeledGraph inner(n);
    inner.edges = m;
    if (!orbit_has_induced_c5_oracle(cograph_to_class(inner))) ++count;
  }
  return count;
}

EdgeWeighting q_switch(const std::vector<int>& x, const EdgeWeighting& a) {
  if (static_cast<int>(x.size()) != a.n)
    throw std::invalid_argument("x must have one entry per vertex");
  for (int v : x)
    if (v < 0 || v >= a.q)
      throw std::invalid_argument("x entries must be reduced mod q");
  EdgeWeighting out = a;
  for (int i = 1; i < a.n; ++i)
    for (int j = i + 1; j <= a.n; ++j)
      out.set(i, j, (a.at(i, j) + x[i - 1] + x[j - 1]) % a.q);
  return out;
}

}  // namespace slopecount
