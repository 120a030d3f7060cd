#include "slopecount/pointcount.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include "slopecount/switching.hpp"

namespace slopecount {

namespace {

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 32;
constexpr std::uint64_t kMinRangeSize = std::uint64_t{1} << 16;

double estimate_points(int q, int d) { return std::pow(double(q), d); }

// q^d or nullopt on 64-bit overflow
std::optional<std::uint64_t> exact_points(int q, int d) {
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / q)
      return std::nullopt;
    total *= q;
  }
  return total;
}

void check_budget(int q, int d, bool override_budget) {
  auto total = exact_points(q, d);
  if (!total || (*total > kDefaultBudget && !override_budget))
    throw BudgetExceeded(estimate_points(q, d));
}

void decode_point(std::uint64_t code, int q, int d, std::uint8_t* digits) {
  for (int s = d - 1; s >= 0; --s) {
    digits[s] = static_cast<std::uint8_t>(code % q);
    code /= q;
  }
}

void advance_point(int q, int d, std::uint8_t* digits) {
  for (int s = d - 1; s >= 0; --s) {
    if (++digits[s] < q) return;
    digits[s] = 0;
  }
}

// Run fn(range_index, start, count) over contiguous ranges covering
// [0, total), then fold the per-range results in range order.
template <typename PerRange>
std::vector<PerRange> run_ranges(
    std::uint64_t total, int threads,
    const std::function<PerRange(std::uint64_t start, std::uint64_t count)>&
        fn) {
  std::uint64_t range_size = std::max(kMinRangeSize, total / (64 * std::max(threads, 1)));
  std::uint64_t n_ranges = (total + range_size - 1) / range_size;
  std::vector<PerRange> results(n_ranges);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::uint64_t r = next.fetch_add(1);
      if (r >= n_ranges) return;
      std::uint64_t start = r * range_size;
      std::uint64_t count = std::min(range_size, total - start);
      results[r] = fn(start, count);
    }
  };
  int nthreads = static_cast<int>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, n_ranges)));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

// Graph-level shortcut for q=2, ideal J: a point is a zero iff no 4-subset
// of G_a induces a labeled P4.
struct P4ScanTables {
  // per 4-subset, the 6 slot positions in local lex order
  std::vector<std::array<int, 6>> subset_slots;
  explicit P4ScanTables(int n) {
    for (int a = 1; a <= n - 3; ++a)
      for (int b = a + 1; b <= n - 2; ++b)
        for (int c = b + 1; c <= n - 1; ++c)
          for (int d = c + 1; d <= n; ++d) {
            int v[4] = {a, b, c, d};
            std::array<int, 6> slots{};
            int t = 0;
            for (int s1 = 0; s1 < 3; ++s1)
              for (int s2 = s1 + 1; s2 < 4; ++s2, ++t)
                slots[t] = edge_slot(n, v[s1], v[s2]);
            subset_slots.push_back(slots);
          }
  }
};

bool mask_is_j_zero(std::uint64_t mask, const P4ScanTables& tables) {
  for (const auto& slots : tables.subset_slots) {
    int code = 0;
    for (int t = 0; t < 6; ++t) code |= int((mask >> slots[t]) & 1) << t;
    if (is_p4_code(code)) return false;
  }
  return true;
}

std::uint64_t count_zeros_mask_fast(int n, std::uint64_t total, int threads) {
  // iteration by bitmask; digit s of the base-2 code is bit d-1-s, a
  // relabeling of the same point space
  P4ScanTables tables(n);
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> fn =
      [&](std::uint64_t start, std::uint64_t count) {
        std::uint64_t zeros = 0;
        for (std::uint64_t m = start; m < start + count; ++m)
          if (mask_is_j_zero(m, tables)) ++zeros;
        return zeros;
      };
  auto partial = run_ranges<std::uint64_t>(total, threads, fn);
  std::uint64_t zeros = 0;
  for (auto p : partial) zeros += p;
  return zeros;
}

// Sampled agreement between the graph shortcut and the polynomial path.
void cross_check_fast_path(int n, std::uint64_t total, const WheelSet& ws,
                           const P4ScanTables& tables) {
  std::mt19937_64 rng(0x510bec0417u);
  int d = edge_slot_count(n);
  EdgeWeighting a(n, 2);
  for (int i = 0; i < 100000; ++i) {
    std::uint64_t mask = rng() % total;
    for (int s = 0; s < d; ++s)
      a.values[s] = static_cast<std::uint8_t>((mask >> s) & 1);
    if (mask_is_j_zero(mask, tables) != is_zero_point(a, ws))
      throw std::logic_error("fast path disagrees with polynomial path at " +
                             format_point(a));
  }
}

}  // namespace

int resolve_thread_count(const CountOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  if (const char* env = std::getenv("SLOPECOUNT_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

CountReport count_zeros(int n, int q, Ideal ideal, const CountOptions& opts) {
  if (!is_supported_prime(q)) throw std::invalid_argument("unsupported q");
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("bad n");
  int d = edge_slot_count(n);
  check_budget(q, d, opts.override_budget);
  std::uint64_t total = *exact_points(q, d);
  int threads = resolve_thread_count(opts);

  auto t0 = std::chrono::steady_clock::now();
  CountReport report;
  report.n = n;
  report.q = q;
  report.ideal = ideal;
  report.total_points = total;

  WheelSet ws = build_wheel_set(n, ideal);
  bool fast_path =
      q == 2 && ideal == Ideal::J && n >= 7 && !opts.paranoid;
  if (fast_path) {
    P4ScanTables tables(n);
    cross_check_fast_path(n, total, ws, tables);
    report.zero_count = count_zeros_mask_fast(n, total, threads);
  } else if (ws.wheels.empty()) {
    report.zero_count = total;
  } else {
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> fn =
        [&](std::uint64_t start, std::uint64_t count) {
          std::vector<std::uint8_t> digits(d);
          decode_point(start, q, d, digits.data());
          std::uint64_t zeros = 0;
          for (std::uint64_t i = 0; i < count; ++i) {
            bool zero = true;
            for (const auto& cw : ws.compiled)
              if (tau_eval(cw, digits.data(), q) != 0) {
                zero = false;
                break;
              }
            if (zero) ++zeros;
            advance_point(q, d, digits.data());
          }
          return zeros;
        };
    auto partial = run_ranges<std::uint64_t>(total, threads, fn);
    for (auto p : partial) report.zero_count += p;
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

CountReport tabulate_by_type(int n, int q, const Wheel& w,
                             const CountOptions& opts) {
  if (!is_supported_prime(q)) throw std::invalid_argument("unsupported q");
  int d = edge_slot_count(n);
  check_budget(q, d, opts.override_budget);
  std::uint64_t total = *exact_points(q, d);
  int threads = resolve_thread_count(opts);

  auto t0 = std::chrono::steady_clock::now();
  CompiledWheel cw = compile_wheel(w, n);

  using TypeRows =
      std::map<TypePartition, std::pair<std::uint64_t, std::uint64_t>>;
  std::function<TypeRows(std::uint64_t, std::uint64_t)> fn =
      [&](std::uint64_t start, std::uint64_t count) {
        std::vector<std::uint8_t> digits(d);
        decode_point(start, q, d, digits.data());
        TypeRows rows;
        std::vector<int> occ(q);
        for (std::uint64_t i = 0; i < count; ++i) {
          std::fill(occ.begin(), occ.end(), 0);
          for (int s = 0; s < d; ++s) ++occ[digits[s]];
          TypePartition type;
          for (int c : occ)
            if (c > 0) type.push_back(c);
          std::sort(type.rbegin(), type.rend());
          auto& row = rows[type];
          if (tau_eval(cw, digits.data(), q) == 0)
            ++row.first;
          else
            ++row.second;
          advance_point(q, d, digits.data());
        }
        return rows;
      };
  auto partial = run_ranges<TypeRows>(total, threads, fn);

  CountReport report;
  report.n = n;
  report.q = q;
  report.ideal = Ideal::I;
  report.total_points = total;
  for (const auto& rows : partial)
    for (const auto& [type, zn] : rows) {
      auto& row = report.per_type[type];
      row.first += zn.first;
      row.second += zn.second;
    }
  for (const auto& [type, zn] : report.per_type) report.zero_count += zn.first;
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

std::string format_wheel(const Wheel& w) {
  std::string out = "W(" + std::to_string(w.center) + ";";
  for (int i = 0; i < w.k(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.spokes[i]);
  }
  return out + ")";
}

Classification classify_point(const EdgeWeighting& a) {
  Classification rec;
  rec.point = a;
  WheelSet ws_i = build_wheel_set(a.n, Ideal::I);
  WheelSet ws_j = build_wheel_set(a.n, Ideal::J);
  int viol = first_violating_wheel(a, ws_i);
  rec.zero_I = viol < 0;
  rec.zero_J = is_zero_point(a, ws_j);
  if (viol >= 0) rec.violating_wheel = format_wheel(ws_i.wheels[viol]);
  if (a.q == 2) {
    LabeledGraph g = weighting_to_graph(a);
    rec.graph = format_graph(g);
    rec.cograph = is_cograph(g);
  }
  return rec;
}

TheoremOneReport verify_theorem1(int n) {
  if (n < 1 || n > 6)
    throw BudgetExceeded(estimate_points(2, edge_slot_count(n)));
  TheoremOneReport rep;
  rep.n = n;
  int d = edge_slot_count(n);
  WheelSet ws_i = build_wheel_set(n, Ideal::I);
  WheelSet ws_j = build_wheel_set(n, Ideal::J);
  rep.pointwise_ok = true;
  EdgeWeighting a(n, 2);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code) {
    decode_point(code, 2, d, a.values.data());
    bool zi = is_zero_point(a, ws_i);
    bool zj = is_zero_point(a, ws_j);
    bool cog = is_cograph(weighting_to_graph(a));
    if (zi) ++rep.zeros_I;
    if (zj) ++rep.zeros_J;
    if (cog) ++rep.cographs;
    if ((zi != zj || zi != cog) && rep.pointwise_ok) {
      rep.pointwise_ok = false;
      rep.counterexample = "point " + format_point(a);
    }
  }
  rep.c5free_classes = count_c5free_classes(n + 1);
  rep.bijection_ok = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    LabeledGraph g(n);
    g.edges = mask;
    bool cog = is_cograph(g);
    bool c5free = !orbit_has_induced_c5_oracle(cograph_to_class(g));
    if (cog != c5free && rep.bijection_ok) {
      rep.bijection_ok = false;
      rep.counterexample = "graph " + format_graph(g);
    }
  }
  rep.counts_equal = rep.zeros_I == rep.zeros_J &&
                     rep.zeros_J == rep.cographs &&
                     rep.cographs == rep.c5free_classes;
  return rep;
}

}  // namespace slopecount
