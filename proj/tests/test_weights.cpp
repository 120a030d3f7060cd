#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "slopecount/field.hpp"

using namespace slopecount;

TEST_CASE("field axioms, exhaustive per q") {
  for (int q : {2, 3, 5, 7, 11, 13}) {
    CHECK(is_supported_prime(q));
    for (int x = 0; x < q; ++x) {
      for (int y = 0; y < q; ++y) {
        CHECK(f_add(x, y, q) == f_add(y, x, q));
        CHECK(f_mul(x, y, q) == f_mul(y, x, q));
        CHECK(f_add(f_sub(x, y, q), y, q) == x);
        for (int z = 0; z < q; ++z) {
          CHECK(f_add(f_add(x, y, q), z, q) == f_add(x, f_add(y, z, q), q));
          CHECK(f_mul(f_mul(x, y, q), z, q) == f_mul(x, f_mul(y, z, q), q));
          CHECK(f_mul(x, f_add(y, z, q), q) ==
                f_add(f_mul(x, y, q), f_mul(x, z, q), q));
        }
      }
      if (x) CHECK(f_mul(x, f_inv(x, q), q) == 1);
    }
    CHECK_THROWS_AS(f_inv(0, q), std::invalid_argument);
  }
  CHECK(!is_supported_prime(4));
  CHECK(!is_supported_prime(17));
}

TEST_CASE("weighting_to_graph") {
  EdgeWeighting zero(4, 2);
  CHECK(weighting_to_graph(zero) == parse_graph("4:"));
  EdgeWeighting ones(4, 2);
  std::fill(ones.values.begin(), ones.values.end(), 1);
  CHECK(weighting_to_graph(ones).edge_count() == 6);
  EdgeWeighting p4 = parse_point("2:4:100101");
  CHECK(weighting_to_graph(p4) == parse_graph("4:12,23,34"));
  EdgeWeighting q3(4, 3);
  CHECK_THROWS_AS(weighting_to_graph(q3), std::invalid_argument);
}

TEST_CASE("graph/weighting bijection for q=2, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    int d = edge_slot_count(n);
    std::set<EdgeMask> images;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code) {
      EdgeWeighting a(n, 2);
      for (int s = 0; s < d; ++s)
        a.values[s] = static_cast<std::uint8_t>((code >> s) & 1);
      LabeledGraph g = weighting_to_graph(a);
      CHECK(graph_to_weighting(g) == a);
      images.insert(g.edges);
    }
    CHECK(images.size() == (std::uint64_t{1} << d));
  }
}

TEST_CASE("complement_weighting") {
  EdgeWeighting zero(4, 2);
  EdgeWeighting ones = complement_weighting(zero);
  for (auto v : ones.values) CHECK(v == 1);
  EdgeWeighting p4 = parse_point("2:4:100101");
  CHECK(complement_weighting(complement_weighting(p4)) == p4);
  CHECK(weighting_to_graph(complement_weighting(p4)) ==
        parse_graph("4:13,14,24"));
  EdgeWeighting q3(4, 3);
  CHECK_THROWS_AS(complement_weighting(q3), std::invalid_argument);
}

TEST_CASE("weight_induced_subgraph") {
  EdgeWeighting a = parse_point("3:4:000112");
  CHECK(weight_induced_subgraph(a, 0) == parse_graph("4:12,13,14"));
  int total = 0;
  for (int alpha = 0; alpha < 3; ++alpha)
    total += weight_induced_subgraph(a, alpha).edge_count();
  CHECK(total == 6);
  EdgeWeighting b = parse_point("2:4:100101");
  CHECK(weight_induced_subgraph(b, 1) == weighting_to_graph(b));
  CHECK(weight_induced_subgraph(b, 0) ==
        complement(weight_induced_subgraph(b, 1)));
  CHECK_THROWS_AS(weight_induced_subgraph(a, 3), std::invalid_argument);
}

TEST_CASE("classify_type") {
  EdgeWeighting constant(4, 3);
  std::fill(constant.values.begin(), constant.values.end(), 2);
  CHECK(classify_type(constant) == TypePartition{6});
  CHECK(classify_type(parse_point("3:4:000112")) == TypePartition{3, 2, 1});
  CHECK(format_type({3, 2, 1}) == "(3,2,1)");
}

TEST_CASE("type census over F_3^6 matches the multinomial counts") {
  std::map<TypePartition, int> census;
  EdgeWeighting a(4, 3);
  for (int code = 0; code < 729; ++code) {
    int c = code;
    for (int s = 5; s >= 0; --s) {
      a.values[s] = static_cast<std::uint8_t>(c % 3);
      c /= 3;
    }
    ++census[classify_type(a)];
  }
  std::map<TypePartition, int> expect{
      {{6}, 3},        {{5, 1}, 36},    {{4, 2}, 90},      {{4, 1, 1}, 90},
      {{3, 3}, 60},    {{3, 2, 1}, 360}, {{2, 2, 2}, 90}};
  CHECK(census == expect);
}

TEST_CASE("point literal parsing") {
  EdgeWeighting a = parse_point("3:4:000112");
  CHECK(a.q == 3);
  CHECK(a.n == 4);
  CHECK(format_point(a) == "3:4:000112");
  // hex alternative for q=2: 0x25 = 100101
  CHECK(parse_point("2:4:0x25") == parse_point("2:4:100101"));
  CHECK_THROWS_AS(parse_point("3:4:00012"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("3:4:000132"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("4:4:000112"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("nope"), std::invalid_argument);
}
