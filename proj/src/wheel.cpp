#include "slopecount/wheel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace slopecount {

Ideal parse_ideal(const std::string& s) {
  if (s == "I" || s == "i") return Ideal::I;
  if (s == "J" || s == "j") return Ideal::J;
  throw std::invalid_argument("ideal must be I or J");
}

std::string ideal_name(Ideal ideal) { return ideal == Ideal::I ? "I" : "J"; }

namespace {

std::vector<int> dihedral_minimal(std::vector<int> cycle) {
  int k = static_cast<int>(cycle.size());
  std::vector<int> best = cycle;
  std::vector<int> cur(k);
  for (int refl = 0; refl < 2; ++refl) {
    for (int rot = 0; rot < k; ++rot) {
      for (int i = 0; i < k; ++i) cur[i] = cycle[(rot + i) % k];
      if (cur < best) best = cur;
    }
    std::reverse(cycle.begin(), cycle.end());
  }
  return best;
}

}  // namespace

Wheel::Wheel(int center_vertex, std::vector<int> spoke_cycle)
    : center(center_vertex), spokes(dihedral_minimal(std::move(spoke_cycle))) {
  if (k() < 3) throw std::invalid_argument("a wheel needs at least 3 spokes");
  std::vector<int> all = spokes;
  all.push_back(center);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end() || all.front() < 1)
    throw std::invalid_argument("wheel vertices must be distinct positive ids");
}

std::vector<std::pair<int, int>> Wheel::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int s : spokes) out.emplace_back(std::min(center, s), std::max(center, s));
  for (int i = 0; i < k(); ++i) {
    int a = spokes[i], b = spokes[(i + 1) % k()];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

LabeledGraph Wheel::as_graph(int n) const {
  LabeledGraph g(n);
  for (auto [i, j] : edges()) g.add_edge(i, j);
  return g;
}

int Wheel::max_vertex() const {
  return std::max(center, *std::max_element(spokes.begin(), spokes.end()));
}

std::vector<Wheel> enumerate_wheels(int n, Ideal ideal) {
  std::vector<Wheel> out;
  if (n < 4) return out;
  int k_max = ideal == Ideal::J ? 3 : n - 1;
  for (int k = 3; k <= k_max; ++k) {
    for (int center = 1; center <= n; ++center) {
      std::vector<int> rest;
      for (int v = 1; v <= n; ++v)
        if (v != center) rest.push_back(v);
      // choose k spokes from rest, lexicographic subsets
      std::vector<int> idx(k);
      for (int i = 0; i < k; ++i) idx[i] = i;
      int m = static_cast<int>(rest.size());
      while (true) {
        std::vector<int> chosen(k);
        for (int i = 0; i < k; ++i) chosen[i] = rest[idx[i]];
        // dihedral classes: fix the minimum first, second < last kills
        // reflection; the remaining (k-1)! / 2 orders are each canonical.
        std::vector<int> tail(chosen.begin() + 1, chosen.end());
        std::sort(tail.begin(), tail.end());
        do {
          if (tail.front() > tail.back()) continue;
          std::vector<int> cycle;
          cycle.push_back(chosen[0]);
          cycle.insert(cycle.end(), tail.begin(), tail.end());
          out.emplace_back(center, std::move(cycle));
        } while (std::next_permutation(tail.begin(), tail.end()));
        // next k-subset
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
      }
    }
  }
  return out;
}

std::uint64_t wheel_count_formula(int n, Ideal ideal) {
  auto binom = [](int a, int b) -> std::uint64_t {
    if (b < 0 || b > a) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  std::uint64_t total = 0;
  int k_max = ideal == Ideal::J ? 3 : n - 1;
  for (int k = 3; k <= k_max; ++k) {
    std::uint64_t fact = 1;
    for (int i = 2; i <= k - 1; ++i) fact *= i;
    total += binom(n - 1, k) * fact / 2;
  }
  return total * n;
}

namespace {

bool spans_wheel(const Wheel& w, const EdgeSet& t) {
  // t must be a spanning tree of w's k+1 vertices: k edges, connected, acyclic
  int k = w.k();
  if (static_cast<int>(t.size()) != k) return false;
  std::vector<int> verts = w.spokes;
  verts.push_back(w.center);
  std::sort(verts.begin(), verts.end());
  auto index_of = [&](int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                            verts.begin());
  };
  std::vector<int> parent(k + 1);
  for (int i = 0; i <= k; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [i, j] : t) {
    int a = find(index_of(i)), b = find(index_of(j));
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

EdgeSet sorted(EdgeSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

bool is_coupled_spanning_tree(const Wheel& w, const EdgeSet& t) {
  EdgeSet all = sorted(w.edges());
  EdgeSet ts = sorted(t);
  if (!std::includes(all.begin(), all.end(), ts.begin(), ts.end()))
    throw std::invalid_argument("edge set not contained in the wheel");
  EdgeSet rest;
  std::set_difference(all.begin(), all.end(), ts.begin(), ts.end(),
                      std::back_inserter(rest));
  return spans_wheel(w, ts) && spans_wheel(w, rest);
}

std::vector<EdgeSet> coupled_spanning_trees(const Wheel& w) {
  int k = w.k();
  auto radius = [&](int i) {
    int s = w.spokes[i];
    return std::make_pair(std::min(w.center, s), std::max(w.center, s));
  };
  auto chord_cw = [&](int i) {
    int a = w.spokes[i], b = w.spokes[(i + 1) % k];
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  auto chord_ccw = [&](int i) {
    int a = w.spokes[(i + k - 1) % k], b = w.spokes[i];
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  std::set<EdgeSet> seen;
  for (unsigned sel = 1; sel + 1 < (1u << k); ++sel) {
    for (int dir = 0; dir < 2; ++dir) {
      EdgeSet t;
      for (int i = 0; i < k; ++i) {
        if (sel & (1u << i))
          t.push_back(radius(i));
        else
          t.push_back(dir ? chord_ccw(i) : chord_cw(i));
      }
      seen.insert(sorted(std::move(t)));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace slopecount
