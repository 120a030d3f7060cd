#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "slopecount/spseries.hpp"

using namespace slopecount;

TEST_CASE("cotree_to_graph") {
  CHECK(cotree_to_graph(Cotree::leaf(1)) == parse_graph("1:"));

  Cotree k4 = Cotree::internal(
      Cotree::Kind::Join, {Cotree::leaf(1), Cotree::leaf(2), Cotree::leaf(3),
                           Cotree::leaf(4)});
  CHECK(cotree_to_graph(k4).edge_count() == 6);

  Cotree k2_k3 = Cotree::internal(
      Cotree::Kind::Union,
      {Cotree::internal(Cotree::Kind::Join, {Cotree::leaf(1), Cotree::leaf(2)}),
       Cotree::internal(Cotree::Kind::Join,
                        {Cotree::leaf(3), Cotree::leaf(4), Cotree::leaf(5)})});
  LabeledGraph g = cotree_to_graph(k2_k3);
  CHECK(g == parse_graph("5:12,34,35,45"));
  CHECK(!has_induced_p4(g));
}

TEST_CASE("cotree validation") {
  // same-kind child breaks alternation
  Cotree bad = Cotree::internal(
      Cotree::Kind::Union,
      {Cotree::internal(Cotree::Kind::Union,
                        {Cotree::leaf(1), Cotree::leaf(2)}),
       Cotree::leaf(3)});
  CHECK_THROWS_AS(cotree_to_graph(bad), std::invalid_argument);
  // labels must biject with 1..n
  Cotree dup = Cotree::internal(Cotree::Kind::Join,
                                {Cotree::leaf(1), Cotree::leaf(1)});
  CHECK_THROWS_AS(cotree_to_graph(dup), std::invalid_argument);
  CHECK_THROWS_AS(Cotree::internal(Cotree::Kind::Leaf, {}),
                  std::invalid_argument);
}

TEST_CASE("paper sequence values") {
  CHECK(count_labeled_cographs(1) == 1);
  CHECK(count_labeled_cographs(2) == 2);
  CHECK(count_labeled_cographs(4) == 52);
  CHECK(count_labeled_cographs(6) == 5504);
  CHECK(count_labeled_cographs(7) == 78416);
  CHECK(sp_sequence(7) ==
        std::vector<std::uint64_t>{1, 2, 8, 52, 472, 5504, 78416});
  CHECK_THROWS_AS(count_labeled_cographs(10), std::invalid_argument);
}

TEST_CASE("sequence is strictly increasing in the listed range") {
  auto seq = sp_sequence(9);
  for (size_t i = 1; i < seq.size(); ++i) CHECK(seq[i] > seq[i - 1]);
}

TEST_CASE("DP count equals brute-force cograph count, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t brute = 0;
    int d = edge_slot_count(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
      LabeledGraph g(n);
      g.edges = m;
      if (is_cograph(g)) ++brute;
    }
    CHECK(count_labeled_cographs(n) == brute);
  }
}

namespace {

// Enumerates all canonical cotrees on the label subset, root restricted to
// the given kind (or a single leaf). Test-only; independent of the DP.
void enumerate_cotrees(const std::vector<int>& labels, Cotree::Kind kind,
                       const std::function<void(const Cotree&)>& emit) {
  if (labels.size() == 1) {
    emit(Cotree::leaf(labels[0]));
    return;
  }
  Cotree::Kind child_kind = kind == Cotree::Kind::Union ? Cotree::Kind::Join
                                                        : Cotree::Kind::Union;
  // partition labels into >= 2 blocks; first block holds labels[0]
  std::vector<int> rest(labels.begin() + 1, labels.end());
  // choose the block of labels[0] as a subset of rest, then recurse on
  // partitions of what is left
  std::function<void(const std::vector<int>&, std::vector<std::vector<int>>&)>
      partition = [&](const std::vector<int>& todo,
                      std::vector<std::vector<int>>& blocks) {
        if (todo.empty()) {
          if (blocks.size() < 2) return;
          // expand each block into all cotrees of the child kind
          std::vector<std::vector<Cotree>> options(blocks.size());
          for (size_t b = 0; b < blocks.size(); ++b)
            enumerate_cotrees(blocks[b], child_kind, [&](const Cotree& t) {
              options[b].push_back(t);
            });
          std::vector<size_t> pick(blocks.size(), 0);
          for (;;) {
            std::vector<Cotree> children;
            for (size_t b = 0; b < blocks.size(); ++b)
              children.push_back(options[b][pick[b]]);
            emit(Cotree::internal(kind, std::move(children)));
            size_t b = 0;
            while (b < pick.size() && ++pick[b] == options[b].size())
              pick[b++] = 0;
            if (b == pick.size()) break;
          }
          return;
        }
        int head = todo[0];
        std::vector<int> tail(todo.begin() + 1, todo.end());
        // index loop: the recursive call grows and shrinks `blocks`
        size_t existing = blocks.size();
        for (size_t b = 0; b < existing; ++b) {
          blocks[b].push_back(head);
          partition(tail, blocks);
          blocks[b].pop_back();
        }
        blocks.push_back({head});
        partition(tail, blocks);
        blocks.pop_back();
      };
  std::vector<std::vector<int>> blocks{{labels[0]}};
  partition(rest, blocks);
}

}  // namespace

TEST_CASE("canonical cotrees biject with labeled cographs, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    std::set<EdgeMask> images;
    std::uint64_t produced = 0;
    for (Cotree::Kind kind : {Cotree::Kind::Union, Cotree::Kind::Join}) {
      enumerate_cotrees(labels, kind, [&](const Cotree& t) {
        if (n == 1 && kind == Cotree::Kind::Join) return;  // leaf counted once
        LabeledGraph g = cotree_to_graph(t);
        REQUIRE(!has_induced_p4(g));
        images.insert(g.edges);
        ++produced;
      });
    }
    CHECK(produced == count_labeled_cographs(n));
    CHECK(images.size() == produced);  // injective
    // surjective onto cographs
    std::uint64_t cographs = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << edge_slot_count(n)); ++m) {
      LabeledGraph g(n);
      g.edges = m;
      if (is_cograph(g)) {
        ++cographs;
        CHECK(images.count(g.edges) == 1);
      }
    }
    CHECK(cographs == images.size());
  }
}
