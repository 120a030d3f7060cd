#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slopecount/field.hpp"
#include "slopecount/wheel.hpp"

namespace slopecount {

// Wheel with its radius/chord coordinates resolved to edge slots of K_n,
// so evaluation is table lookups only. chord_cw[i] is the slot of
// (spoke_i, spoke_{i+1}); the counterclockwise chord at i is chord_cw[i-1].
struct CompiledWheel {
  int k = 0;
  std::vector<int> radius_slot;
  std::vector<int> chord_cw_slot;
};

CompiledWheel compile_wheel(const Wheel& w, int n);

// tau_W(a) = prod_i (r_i - c_i^cw) - prod_i (r_i - c_i^ccw) in F_q.
// Each product stops at the first zero factor.
int tau_eval(const CompiledWheel& w, const std::uint8_t* values, int q);
int tau_eval(const Wheel& w, const EdgeWeighting& a);

// Independent oracle over F_2: sum over coupled spanning trees of the
// product of the tree's coordinates.
int tau_eval_expanded_mod2(const Wheel& w, const EdgeWeighting& a);

// Wheel tables for repeated point tests, built once per (n, ideal).
struct WheelSet {
  int n = 0;
  Ideal ideal = Ideal::J;
  std::vector<Wheel> wheels;
  std::vector<CompiledWheel> compiled;
};

WheelSet build_wheel_set(int n, Ideal ideal);

bool is_zero_point(const EdgeWeighting& a, const WheelSet& ws);
bool is_zero_point(const EdgeWeighting& a, Ideal ideal);

// Index into ws.wheels of the first wheel with tau != 0, or -1.
int first_violating_wheel(const EdgeWeighting& a, const WheelSet& ws);

// Factored integer form of tau_W with variables m_i_j, one line.
std::string export_polynomial(const Wheel& w);

}  // namespace slopecount
