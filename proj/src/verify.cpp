#include "slopecount/verify.hpp"

#include <algorithm>

#include "slopecount/field.hpp"
#include "slopecount/pointcount.hpp"
#include "slopecount/switching.hpp"
#include "slopecount/treepoly.hpp"

namespace slopecount {

namespace {

std::vector<Wheel> canonical_k_wheels(int k) {
  std::vector<Wheel> out;
  for (const auto& w : enumerate_wheels(k + 1, Ideal::I))
    if (w.k() == k) out.push_back(w);
  return out;
}

// Enumerates F_2 assignments to the wheel's 2k edge slots, all other edges
// of K_{k+1} zero, and hands each to fn(point, one_edges).
template <typename Fn>
std::uint64_t for_each_wheel_weighting(const Wheel& w, Fn&& fn) {
  int n = w.k() + 1;
  auto wheel_edges = w.edges();
  std::uint64_t checked = 0;
  EdgeWeighting a(n, 2);
  for (unsigned sel = 0; sel < (1u << wheel_edges.size()); ++sel) {
    std::fill(a.values.begin(), a.values.end(), 0);
    EdgeSet ones;
    for (size_t e = 0; e < wheel_edges.size(); ++e)
      if (sel & (1u << e)) {
        a.set(wheel_edges[e].first, wheel_edges[e].second, 1);
        ones.push_back(wheel_edges[e]);
      }
    std::sort(ones.begin(), ones.end());
    fn(a, ones);
    ++checked;
  }
  return checked;
}

}  // namespace

CheckResult check_tree_not_zero(int k) {
  CheckResult res{"tree-not-zero k=" + std::to_string(k), true, 0, ""};
  for (const auto& w : canonical_k_wheels(k)) {
    res.checked += for_each_wheel_weighting(w, [&](const EdgeWeighting& a,
                                                   const EdgeSet& ones) {
      bool nonzero = tau_eval(w, a) != 0;
      bool coupled = is_coupled_spanning_tree(w, ones);
      if (nonzero != coupled && res.pass) {
        res.pass = false;
        res.detail = format_wheel(w) + " at " + format_point(a);
      }
    });
  }
  return res;
}

CheckResult check_expansion_oracle(int k) {
  CheckResult res{"expansion-oracle k=" + std::to_string(k), true, 0, ""};
  for (const auto& w : canonical_k_wheels(k)) {
    res.checked += for_each_wheel_weighting(
        w, [&](const EdgeWeighting& a, const EdgeSet&) {
          if (tau_eval(w, a) != tau_eval_expanded_mod2(w, a) && res.pass) {
            res.pass = false;
            res.detail = format_wheel(w) + " at " + format_point(a);
          }
        });
  }
  return res;
}

CheckResult check_complement_symmetry(int k) {
  CheckResult res{"complement-symmetry k=" + std::to_string(k), true, 0, ""};
  for (const auto& w : canonical_k_wheels(k)) {
    res.checked += for_each_wheel_weighting(
        w, [&](const EdgeWeighting& a, const EdgeSet&) {
          if (tau_eval(w, a) != tau_eval(w, complement_weighting(a)) &&
              res.pass) {
            res.pass = false;
            res.detail = format_wheel(w) + " at " + format_point(a);
          }
        });
  }
  return res;
}

CheckResult check_cog5cyc(int n) {
  CheckResult res{"cog5cyc n=" + std::to_string(n), true, 0, ""};
  int d = edge_slot_count(n + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    LabeledGraph g(n + 1);
    g.edges = mask;
    bool g_has_c5 = has_induced_c5(g);
    for (unsigned x = 0; x < (1u << n); ++x) {
      LabeledGraph s = switch_graph_mask(g, x);
      // direction 1: C5 member forces P4 in every member
      if (g_has_c5 && !has_induced_p4(s)) {
        if (res.pass) {
          res.pass = false;
          res.detail = "C5 graph " + format_graph(g) + " switched by x=" +
                       std::to_string(x) + " lacks a P4";
        }
      }
      ++res.checked;
    }
    // direction 2: a representative whose inner part has a P4 must have a
    // C5 member somewhere in the orbit
    bool rep_isolated = true;
    for (int v = 1; v <= n; ++v)
      if (g.has_edge(v, n + 1)) rep_isolated = false;
    if (rep_isolated) {
      std::vector<int> inner(n);
      for (int v = 0; v < n; ++v) inner[v] = v + 1;
      if (has_induced_p4(induced_subgraph(g, inner)) &&
          !orbit_has_induced_c5_oracle(SwitchingClass{g}) && res.pass) {
        res.pass = false;
        res.detail = "P4 representative " + format_graph(g) +
                     " has no C5 orbit member";
      }
    }
  }
  return res;
}

CheckResult check_generalize(int q) {
  CheckResult res{"generalize q=" + std::to_string(q), true, 0, ""};
  Wheel w(1, {2, 3, 4});
  CompiledWheel cw = compile_wheel(w, 4);
  EdgeWeighting a(4, q);
  int d = 6;
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int s = d - 1; s >= 0; --s) {
      a.values[s] = static_cast<std::uint8_t>(c % q);
      c /= q;
    }
    bool zero = tau_eval(cw, a.values.data(), q) == 0;
    bool lvl_p4 = false, lvl_claw = false, lvl_cycle = false;
    for (int alpha = 0; alpha < q; ++alpha) {
      LabeledGraph lvl = weight_induced_subgraph(a, alpha);
      int code4 = induced_code4(lvl, 1, 2, 3, 4);
      lvl_p4 = lvl_p4 || is_p4_code(code4);
      lvl_claw = lvl_claw || is_claw_code(code4);
      lvl_cycle = lvl_cycle || has_cycle(lvl);
    }
    bool bad = (lvl_p4 && zero) || (lvl_claw && !zero) || (lvl_cycle && !zero);
    if (bad && res.pass) {
      res.pass = false;
      res.detail = "point " + format_point(a);
    }
    ++res.checked;
  }
  return res;
}

}  // namespace slopecount
