#include "slopecount/graph.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace slopecount {

std::pair<int, int> slot_to_edge(int n, int slot) {
  for (int i = 1; i < n; ++i) {
    int row = n - i;
    if (slot < row) return {i, i + 1 + slot};
    slot -= row;
  }
  throw std::invalid_argument("edge slot out of range");
}

LabeledGraph::LabeledGraph(int n_vertices) : n(n_vertices) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range [1," +
                                std::to_string(kMaxVertices) + "]");
}

LabeledGraph& LabeledGraph::add_edge(int i, int j) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("bad edge endpoints");
  edges |= EdgeMask{1} << edge_slot(n, i, j);
  return *this;
}

LabeledGraph& LabeledGraph::remove_edge(int i, int j) {
  edges &= ~(EdgeMask{1} << edge_slot(n, i, j));
  return *this;
}

int LabeledGraph::edge_count() const {
  int c = 0;
  for (EdgeMask m = edges; m; m &= m - 1) ++c;
  return c;
}

std::vector<std::pair<int, int>> LabeledGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  int d = edge_slot_count(n);
  for (int s = 0; s < d; ++s)
    if ((edges >> s) & 1) out.push_back(slot_to_edge(n, s));
  return out;
}

LabeledGraph complement(const LabeledGraph& g) {
  LabeledGraph h(g.n);
  EdgeMask full = (EdgeMask{1} << edge_slot_count(g.n)) - 1;
  h.edges = full & ~g.edges;
  return h;
}

LabeledGraph intersect(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.n != h.n)
    throw std::invalid_argument("intersect requires equal vertex counts");
  LabeledGraph out(g.n);
  out.edges = g.edges & h.edges;
  return out;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& u) {
  for (int v : u)
    if (v < 1 || v > g.n) throw std::invalid_argument("vertex id out of range");
  std::vector<int> verts = u;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  LabeledGraph h(static_cast<int>(verts.size()));
  for (size_t a = 0; a + 1 < verts.size(); ++a)
    for (size_t b = a + 1; b < verts.size(); ++b)
      if (g.has_edge(verts[a], verts[b]))
        h.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
  return h;
}

namespace {

// Adjacency bitmasks over vertices 0..n-1 for connectivity scans.
std::array<std::uint16_t, kMaxVertices> adjacency(const LabeledGraph& g) {
  std::array<std::uint16_t, kMaxVertices> adj{};
  for (int i = 1; i < g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j)
      if (g.has_edge(i, j)) {
        adj[i - 1] |= std::uint16_t(1u << (j - 1));
        adj[j - 1] |= std::uint16_t(1u << (i - 1));
      }
  return adj;
}

// The 12 labeled P4 edge codes and 4 labeled claw codes on 4 fixed vertices,
// indexed by the 6-bit local code (slots 01,02,03,12,13,23).
struct PatternTables {
  bool p4[64] = {};
  bool claw[64] = {};
  PatternTables() {
    int perm[4] = {0, 1, 2, 3};
    std::sort(perm, perm + 4);
    do {
      // path perm[0]-perm[1]-perm[2]-perm[3]
      int code = 0;
      for (int t = 0; t < 3; ++t) {
        int a = std::min(perm[t], perm[t + 1]);
        int b = std::max(perm[t], perm[t + 1]);
        code |= 1 << edge_slot(4, a + 1, b + 1);
      }
      p4[code] = true;
    } while (std::next_permutation(perm, perm + 4));
    for (int center = 0; center < 4; ++center) {
      int code = 0;
      for (int v = 0; v < 4; ++v)
        if (v != center) code |= 1 << edge_slot(4, std::min(center, v) + 1,
                                                std::max(center, v) + 1);
      claw[code] = true;
    }
  }
};

const PatternTables& patterns() {
  static const PatternTables t;
  return t;
}

// 10-bit codes of the 12 labeled 5-cycles on 5 fixed vertices.
struct C5Table {
  bool c5[1024] = {};
  C5Table() {
    int perm[5] = {0, 1, 2, 3, 4};
    do {
      if (perm[0] != 0) break;           // fix rotation
      if (perm[1] > perm[4]) continue;   // fix reflection
      int code = 0;
      for (int t = 0; t < 5; ++t) {
        int a = perm[t], b = perm[(t + 1) % 5];
        code |= 1 << edge_slot(5, std::min(a, b) + 1, std::max(a, b) + 1);
      }
      c5[code] = true;
    } while (std::next_permutation(perm, perm + 5));
  }
};

const C5Table& c5_table() {
  static const C5Table t;
  return t;
}

}  // namespace

bool is_connected(const LabeledGraph& g) {
  if (g.n == 1) return true;
  auto adj = adjacency(g);
  std::uint16_t seen = 1, frontier = 1;
  std::uint16_t all = std::uint16_t((1u << g.n) - 1);
  while (frontier) {
    std::uint16_t next = 0;
    for (std::uint16_t f = frontier; f; f &= std::uint16_t(f - 1)) {
      int v = __builtin_ctz(f);
      next |= adj[v];
    }
    frontier = std::uint16_t(next & ~seen);
    seen |= next;
  }
  return seen == all;
}

bool has_cycle(const LabeledGraph& g) {
  // forest iff |E| = n - #components
  int parent[kMaxVertices];
  for (int v = 0; v < g.n; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [i, j] : g.edge_list()) {
    int a = find(i - 1), b = find(j - 1);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

int induced_code4(const LabeledGraph& g, int a, int b, int c, int d) {
  int v[4] = {a, b, c, d};
  int code = 0, bit = 0;
  for (int s = 0; s < 3; ++s)
    for (int t = s + 1; t < 4; ++t, ++bit)
      if (g.has_edge(v[s], v[t])) code |= 1 << bit;
  return code;
}

bool is_p4_code(int code) { return patterns().p4[code]; }
bool is_claw_code(int code) { return patterns().claw[code]; }

bool has_induced_p4(const LabeledGraph& g) {
  for (int a = 1; a <= g.n - 3; ++a)
    for (int b = a + 1; b <= g.n - 2; ++b)
      for (int c = b + 1; c <= g.n - 1; ++c)
        for (int d = c + 1; d <= g.n; ++d)
          if (patterns().p4[induced_code4(g, a, b, c, d)]) return true;
  return false;
}

bool has_induced_c5(const LabeledGraph& g) {
  if (g.n < 5) return false;
  for (int a = 1; a <= g.n - 4; ++a)
    for (int b = a + 1; b <= g.n - 3; ++b)
      for (int c = b + 1; c <= g.n - 2; ++c)
        for (int d = c + 1; d <= g.n - 1; ++d)
          for (int e = d + 1; e <= g.n; ++e) {
            int v[5] = {a, b, c, d, e};
            int code = 0, bit = 0;
            for (int s = 0; s < 4; ++s)
              for (int t = s + 1; t < 5; ++t, ++bit)
                if (g.has_edge(v[s], v[t])) code |= 1 << bit;
            if (c5_table().c5[code]) return true;
          }
  return false;
}

bool is_cograph(const LabeledGraph& g) { return !has_induced_p4(g); }

namespace {

bool reducible(const LabeledGraph& g, std::vector<int> verts) {
  if (verts.size() <= 1) return true;
  LabeledGraph h = induced_subgraph(g, verts);
  if (is_connected(h)) {
    h = complement(h);
    if (is_connected(h)) return false;
  }
  // split into components of h, recurse on original labels
  auto adj = adjacency(h);
  std::uint16_t unseen = std::uint16_t((1u << h.n) - 1);
  while (unseen) {
    int start = __builtin_ctz(unseen);
    std::uint16_t comp = std::uint16_t(1u << start), frontier = comp;
    while (frontier) {
      std::uint16_t next = 0;
      for (std::uint16_t f = frontier; f; f &= std::uint16_t(f - 1))
        next |= adj[__builtin_ctz(f)];
      frontier = std::uint16_t(next & ~comp);
      comp |= next;
    }
    unseen &= std::uint16_t(~comp);
    std::vector<int> sub;
    for (std::uint16_t m = comp; m; m &= std::uint16_t(m - 1))
      sub.push_back(verts[__builtin_ctz(m)]);
    if (!reducible(g, std::move(sub))) return false;
  }
  return true;
}

}  // namespace

bool is_cograph_by_reduction(const LabeledGraph& g) {
  std::vector<int> all(g.n);
  for (int v = 0; v < g.n; ++v) all[v] = v + 1;
  return reducible(g, std::move(all));
}

LabeledGraph parse_graph(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("graph literal needs 'n:edges'");
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad vertex count in graph literal");
  }
  if (n < 1 || n > 9)
    throw std::invalid_argument("graph literal supports 1 <= n <= 9");
  LabeledGraph g(n);
  std::string rest = text.substr(colon + 1);
  std::stringstream ss(rest);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok.size() != 2 || !isdigit(tok[0]) || !isdigit(tok[1]))
      throw std::invalid_argument("bad edge token '" + tok + "'");
    int i = tok[0] - '0', j = tok[1] - '0';
    if (i == j || i < 1 || j < 1 || i > n || j > n)
      throw std::invalid_argument("bad edge token '" + tok + "'");
    g.add_edge(i, j);
  }
  return g;
}

std::string format_graph(const LabeledGraph& g) {
  std::string out = std::to_string(g.n) + ":";
  bool first = true;
  for (auto [i, j] : g.edge_list()) {
    if (!first) out += ',';
    out += std::to_string(i) + std::to_string(j);
    first = false;
  }
  return out;
}

}  // namespace slopecount
