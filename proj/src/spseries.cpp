#include "slopecount/spseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace slopecount {

Cotree Cotree::leaf(int label) {
  Cotree t;
  t.kind = Kind::Leaf;
  t.label = label;
  return t;
}

Cotree Cotree::internal(Kind kind, std::vector<Cotree> children) {
  if (kind == Kind::Leaf)
    throw std::invalid_argument("internal node must be Union or Join");
  Cotree t;
  t.kind = kind;
  t.children = std::move(children);
  return t;
}

namespace {

void collect_labels(const Cotree& t, std::vector<int>& labels) {
  if (t.kind == Cotree::Kind::Leaf) {
    labels.push_back(t.label);
    return;
  }
  if (t.children.size() < 2)
    throw std::invalid_argument("internal node needs >= 2 children");
  for (const auto& c : t.children) {
    if (c.kind == t.kind)
      throw std::invalid_argument("child kind must alternate with parent");
    collect_labels(c, labels);
  }
}

void add_edges(const Cotree& t, LabeledGraph& g, std::vector<int>& leaves) {
  if (t.kind == Cotree::Kind::Leaf) {
    leaves.push_back(t.label);
    return;
  }
  std::vector<std::vector<int>> per_child;
  for (const auto& c : t.children) {
    std::vector<int> sub;
    add_edges(c, g, sub);
    per_child.push_back(sub);
    leaves.insert(leaves.end(), sub.begin(), sub.end());
  }
  if (t.kind == Cotree::Kind::Join)
    for (size_t a = 0; a + 1 < per_child.size(); ++a)
      for (size_t b = a + 1; b < per_child.size(); ++b)
        for (int u : per_child[a])
          for (int v : per_child[b]) g.add_edge(u, v);
}

}  // namespace

LabeledGraph cotree_to_graph(const Cotree& t) {
  std::vector<int> labels;
  collect_labels(t, labels);
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("leaf labels must be a bijection with 1..n");
  LabeledGraph g(static_cast<int>(labels.size()));
  std::vector<int> leaves;
  add_edges(t, g, leaves);
  return g;
}

namespace {

// Subset DP over leaf sets. For a subset S:
//   block_w(S) = ways to realize S as one block: a leaf if |S|=1, else a
//                sub-cotree whose root has the (fixed, opposite) kind; by
//                the union/join symmetry that count is kind-independent.
//   parts(S)   = sum over partitions of S into >= 1 blocks of prod block_w
//   trees(S)   = same but >= 2 blocks, i.e. cotrees rooted at a fixed kind
// Values stay far below 2^64 for n <= 9; accumulate in 128 bits and check.
struct SubsetDp {
  int n;
  std::vector<std::uint64_t> block_w, parts;
  std::vector<char> have_block, have_parts;

  explicit SubsetDp(int n_leaves)
      : n(n_leaves),
        block_w(size_t{1} << n, 0),
        parts(size_t{1} << n, 0),
        have_block(size_t{1} << n, 0),
        have_parts(size_t{1} << n, 0) {}

  std::uint64_t block(unsigned s) {
    if (have_block[s]) return block_w[s];
    have_block[s] = 1;
    block_w[s] = (s & (s - 1)) == 0 ? 1 : trees(s);
    return block_w[s];
  }

  std::uint64_t trees(unsigned s) {
    // partitions into >= 2 blocks: the block containing min(s) is proper
    unsigned low = s & (0u - s);
    unsigned rest = s & ~low;
    unsigned __int128 total = 0;
    for (unsigned sub = rest;; sub = (sub - 1) & rest) {
      unsigned b = low | sub;
      if (b != s) total += static_cast<unsigned __int128>(block(b)) *
                           partitions(s & ~b);
      if (sub == 0) break;
    }
    if (total >> 64) throw std::overflow_error("cotree count overflow");
    return static_cast<std::uint64_t>(total);
  }

  std::uint64_t partitions(unsigned s) {
    if (s == 0) return 1;
    if (have_parts[s]) return parts[s];
    have_parts[s] = 1;
    unsigned low = s & (0u - s);
    unsigned rest = s & ~low;
    unsigned __int128 total = 0;
    for (unsigned sub = rest;; sub = (sub - 1) & rest) {
      unsigned b = low | sub;
      total += static_cast<unsigned __int128>(block(b)) * partitions(s & ~b);
      if (sub == 0) break;
    }
    if (total >> 64) throw std::overflow_error("cotree count overflow");
    parts[s] = static_cast<std::uint64_t>(total);
    return parts[s];
  }
};

}  // namespace

std::uint64_t count_labeled_cographs(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > 9) throw std::invalid_argument("subset DP budget is n <= 9");
  if (n == 1) return 1;
  SubsetDp dp(n);
  // root kind is union or join, counts coincide by complementation
  return 2 * dp.trees((1u << n) - 1);
}

std::vector<std::uint64_t> sp_sequence(int n_max) {
  std::vector<std::uint64_t> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(count_labeled_cographs(n));
  return out;
}

}  // namespace slopecount
