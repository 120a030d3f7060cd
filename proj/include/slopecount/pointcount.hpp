#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "slopecount/field.hpp"
#include "slopecount/treepoly.hpp"
#include "slopecount/wheel.hpp"

namespace slopecount {

struct BudgetExceeded : std::runtime_error {
  double estimated_points;
  explicit BudgetExceeded(double estimate)
      : std::runtime_error("point budget exceeded: ~" +
                           std::to_string(estimate) + " points"),
        estimated_points(estimate) {}
};

struct CountOptions {
  int threads = 0;            // 0: SLOPECOUNT_THREADS env, else hardware
  bool override_budget = false;
  bool paranoid = false;      // force polynomial path even where the
                              // graph-level shortcut applies
};

int resolve_thread_count(const CountOptions& opts);

struct CountReport {
  int n = 0;
  int q = 2;
  Ideal ideal = Ideal::J;
  std::uint64_t zero_count = 0;
  std::uint64_t total_points = 0;
  double elapsed_ms = 0;
  // per-type rows: type -> (zeros, non-zeros); empty when not tabulated
  std::map<TypePartition, std::pair<std::uint64_t, std::uint64_t>> per_type;
};

// Exhaustive zero count of the ideal over F_q^C(n,2). Deterministic for any
// worker count. Default budget: at most 2^32 points.
CountReport count_zeros(int n, int q, Ideal ideal,
                        const CountOptions& opts = {});

// Zero/non-zero split of a single tau_W by point type.
CountReport tabulate_by_type(int n, int q, const Wheel& w,
                             const CountOptions& opts = {});

struct Classification {
  EdgeWeighting point;
  bool zero_I = false;
  bool zero_J = false;
  // q=2 extras
  std::optional<std::string> graph;      // G_a literal
  std::optional<bool> cograph;
  std::optional<std::string> violating_wheel;  // first wheel of I_n with tau != 0
};

Classification classify_point(const EdgeWeighting& a);

struct TheoremOneReport {
  int n = 0;
  std::uint64_t zeros_I = 0;
  std::uint64_t zeros_J = 0;
  std::uint64_t cographs = 0;
  std::uint64_t c5free_classes = 0;
  bool counts_equal = false;
  bool pointwise_ok = false;   // zero(a) <-> G_a cograph, and both ideals agree
  bool bijection_ok = false;   // cograph <-> C5-free class, element by element
  std::string counterexample;  // empty when everything holds

  bool pass() const { return counts_equal && pointwise_ok && bijection_ok; }
};

// Four independent computations of the F_2 count, n <= 6.
TheoremOneReport verify_theorem1(int n);

std::string format_wheel(const Wheel& w);

}  // namespace slopecount
