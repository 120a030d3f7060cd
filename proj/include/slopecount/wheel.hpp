#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slopecount/graph.hpp"

namespace slopecount {

enum class Ideal { I, J };

Ideal parse_ideal(const std::string& s);
std::string ideal_name(Ideal ideal);

// A k-wheel W(center; spokes), spokes cyclically ordered, stored in the
// dihedral-minimal rotation/reflection of the spoke sequence.
struct Wheel {
  int center = 0;
  std::vector<int> spokes;

  Wheel(int center_vertex, std::vector<int> spoke_cycle);

  int k() const { return static_cast<int>(spokes.size()); }
  int edge_count() const { return 2 * k(); }

  // radii first, then chords (v_i, v_{i+1}) in cycle order; pairs normalized.
  std::vector<std::pair<int, int>> edges() const;
  LabeledGraph as_graph(int n) const;
  int max_vertex() const;

  auto operator<=>(const Wheel&) const = default;
};

// Canonical wheels of K_n: all wheels for Ideal::I, 3-wheels only for Ideal::J.
// Order: k ascending, then center, then spoke sequence.
std::vector<Wheel> enumerate_wheels(int n, Ideal ideal);

// Closed form: n * sum_{k=3}^{n-1} C(n-1,k) (k-1)!/2 (k=3 term only for J).
std::uint64_t wheel_count_formula(int n, Ideal ideal);

// Edge sets are sorted vectors of normalized pairs.
using EdgeSet = std::vector<std::pair<int, int>>;

std::vector<EdgeSet> coupled_spanning_trees(const Wheel& w);
bool is_coupled_spanning_tree(const Wheel& w, const EdgeSet& t);

}  // namespace slopecount
