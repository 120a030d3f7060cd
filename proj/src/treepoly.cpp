#include "slopecount/treepoly.hpp"

#include <stdexcept>

namespace slopecount {

CompiledWheel compile_wheel(const Wheel& w, int n) {
  if (w.max_vertex() > n)
    throw std::invalid_argument("wheel vertex out of range for n");
  CompiledWheel c;
  c.k = w.k();
  for (int i = 0; i < c.k; ++i) {
    c.radius_slot.push_back(edge_slot(n, w.center, w.spokes[i]));
    c.chord_cw_slot.push_back(
        edge_slot(n, w.spokes[i], w.spokes[(i + 1) % c.k]));
  }
  return c;
}

int tau_eval(const CompiledWheel& w, const std::uint8_t* values, int q) {
  int k = w.k;
  int t1 = 1;
  for (int i = 0; i < k && t1; ++i) {
    int r = values[w.radius_slot[i]];
    t1 = t1 * ((r - values[w.chord_cw_slot[i]] + q) % q) % q;
  }
  int t2 = 1;
  for (int i = 0; i < k && t2; ++i) {
    int r = values[w.radius_slot[i]];
    t2 = t2 * ((r - values[w.chord_cw_slot[(i + k - 1) % k]] + q) % q) % q;
  }
  return (t1 - t2 + q) % q;
}

int tau_eval(const Wheel& w, const EdgeWeighting& a) {
  return tau_eval(compile_wheel(w, a.n), a.values.data(), a.q);
}

int tau_eval_expanded_mod2(const Wheel& w, const EdgeWeighting& a) {
  if (a.q != 2)
    throw std::invalid_argument("expanded form is defined mod 2 only");
  if (w.max_vertex() > a.n)
    throw std::invalid_argument("wheel vertex out of range for n");
  int sum = 0;
  for (const auto& t : coupled_spanning_trees(w)) {
    int prod = 1;
    for (auto [i, j] : t) prod &= a.at(i, j);
    sum ^= prod;
  }
  return sum;
}

WheelSet build_wheel_set(int n, Ideal ideal) {
  WheelSet ws;
  ws.n = n;
  ws.ideal = ideal;
  ws.wheels = enumerate_wheels(n, ideal);
  for (const auto& w : ws.wheels) ws.compiled.push_back(compile_wheel(w, n));
  return ws;
}

int first_violating_wheel(const EdgeWeighting& a, const WheelSet& ws) {
  if (ws.n != a.n) throw std::invalid_argument("wheel set built for wrong n");
  for (size_t i = 0; i < ws.compiled.size(); ++i)
    if (tau_eval(ws.compiled[i], a.values.data(), a.q) != 0)
      return static_cast<int>(i);
  return -1;
}

bool is_zero_point(const EdgeWeighting& a, const WheelSet& ws) {
  return first_violating_wheel(a, ws) < 0;
}

bool is_zero_point(const EdgeWeighting& a, Ideal ideal) {
  return is_zero_point(a, build_wheel_set(a.n, ideal));
}

std::string export_polynomial(const Wheel& w) {
  auto var = [](int i, int j) {
    if (i > j) std::swap(i, j);
    return "m_" + std::to_string(i) + "_" + std::to_string(j);
  };
  int k = w.k();
  std::string out;
  for (int dir = 0; dir < 2; ++dir) {
    if (dir) out += "-";
    for (int i = 0; i < k; ++i) {
      if (i) out += "*";
      int mate = w.spokes[dir == 0 ? (i + 1) % k : (i + k - 1) % k];
      out += "(" + var(w.center, w.spokes[i]) + "-" +
             var(w.spokes[i], mate) + ")";
    }
  }
  return out;
}

}  // namespace slopecount
