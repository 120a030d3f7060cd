#pragma once

#include <cstdint>
#include <vector>

#include "slopecount/graph.hpp"

namespace slopecount {

// Canonical cograph decomposition tree: leaves carry vertex labels, internal
// nodes have >= 2 children and alternate union/join along every path.
struct Cotree {
  enum class Kind { Leaf, Union, Join };
  Kind kind = Kind::Leaf;
  int label = 0;                  // leaves only
  std::vector<Cotree> children;   // internal nodes only

  static Cotree leaf(int label);
  static Cotree internal(Kind kind, std::vector<Cotree> children);
};

// Union: disjoint union of children; Join: union plus all cross edges.
// Vertex set is the leaf labels, which must be a bijection with {1..n}.
LabeledGraph cotree_to_graph(const Cotree& t);

// Number of labeled cographs on [n] by subset DP over canonical cotrees.
// Equals s(n), the labeled series-parallel network count (A006351).
std::uint64_t count_labeled_cographs(int n);

// (s(1), ..., s(n_max)).
std::vector<std::uint64_t> sp_sequence(int n_max);

}  // namespace slopecount
