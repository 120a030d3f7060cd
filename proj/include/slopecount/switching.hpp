#pragma once

#include <cstdint>
#include <vector>

#include "slopecount/field.hpp"
#include "slopecount/graph.hpp"

namespace slopecount {

// Orbit of the switching action of Z_2^n on graphs over {1..n+1},
// represented by its unique member with vertex n+1 isolated.
struct SwitchingClass {
  LabeledGraph representative;

  bool operator==(const SwitchingClass&) const = default;
};

// Complement exactly the edges with one endpoint in X; X subset of {1..n}
// where the graph lives on {1..n+1}.
LabeledGraph switch_graph(const LabeledGraph& g, const std::vector<int>& x);
LabeledGraph switch_graph_mask(const LabeledGraph& g, unsigned x_mask);

SwitchingClass canonical_representative(const LabeledGraph& g);

// Fast path: P4 test on the representative restricted to {1..n}.
bool orbit_has_induced_c5(const SwitchingClass& c);
// Scans all 2^n orbit members for an induced C5.
bool orbit_has_induced_c5_oracle(const SwitchingClass& c);

// Append isolated vertex n+1; a bijection from graphs on [n] to classes.
SwitchingClass cograph_to_class(const LabeledGraph& g);

// Counts via the brute-force orbit oracle, n_plus_1 <= 7.
std::uint64_t count_c5free_classes(int n_plus_1);

// The additive F_q^n action: (x . a)_ij = a_ij + x_i + x_j.
EdgeWeighting q_switch(const std::vector<int>& x, const EdgeWeighting& a);

}  // namespace slopecount
