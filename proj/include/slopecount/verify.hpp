#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slopecount/wheel.hpp"

namespace slopecount {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::uint64_t checked = 0;
  std::string detail;  // counterexample on failure
};

// tau_W(a) != 0 iff the 1-edges of the wheel form a coupled spanning tree,
// over all 2^{2k} F_2-weightings of each canonical k-wheel of K_{k+1}.
CheckResult check_tree_not_zero(int k);

// tau_eval agrees with the Cpl(W) expansion on the same range.
CheckResult check_expansion_oracle(int k);

// tau_W(a) = tau_W(complement a) over F_2 on the same range.
CheckResult check_complement_symmetry(int k);

// Both switching implications over all graphs on [n+1] and all 2^n switches:
// an induced C5 anywhere in the orbit forces a P4 everywhere, and a P4 in
// the representative's inner part yields a C5 somewhere in the orbit.
CheckResult check_cog5cyc(int n);

// Weight-induced P4 => nonzero, claw => zero, cycle => zero for the
// 3-wheel over all q^6 weightings.
CheckResult check_generalize(int q);

}  // namespace slopecount
