#include "slopecount/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace slopecount {

bool is_supported_prime(int q) {
  return q == 2 || q == 3 || q == 5 || q == 7 || q == 11 || q == 13;
}

int f_inv(int x, int q) {
  x %= q;
  if (x == 0) throw std::invalid_argument("zero has no inverse");
  // q is tiny, scan
  for (int y = 1; y < q; ++y)
    if (x * y % q == 1) return y;
  throw std::invalid_argument("modulus is not prime");
}

EdgeWeighting::EdgeWeighting(int n_vertices, int modulus)
    : n(n_vertices), q(modulus) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range");
  if (!is_supported_prime(q))
    throw std::invalid_argument("q must be a prime <= 13");
  values.assign(edge_slot_count(n), 0);
}

LabeledGraph weighting_to_graph(const EdgeWeighting& a) {
  if (a.q != 2)
    throw std::invalid_argument("weighting_to_graph requires q=2");
  LabeledGraph g(a.n);
  for (int s = 0; s < a.slot_count(); ++s)
    if (a.values[s]) g.edges |= EdgeMask{1} << s;
  return g;
}

EdgeWeighting graph_to_weighting(const LabeledGraph& g) {
  EdgeWeighting a(g.n, 2);
  for (int s = 0; s < a.slot_count(); ++s)
    a.values[s] = static_cast<std::uint8_t>((g.edges >> s) & 1);
  return a;
}

EdgeWeighting complement_weighting(const EdgeWeighting& a) {
  if (a.q != 2)
    throw std::invalid_argument("complement_weighting requires q=2");
  EdgeWeighting b = a;
  for (auto& v : b.values) v ^= 1;
  return b;
}

LabeledGraph weight_induced_subgraph(const EdgeWeighting& a, int alpha) {
  if (alpha < 0 || alpha >= a.q)
    throw std::invalid_argument("alpha must be reduced mod q");
  LabeledGraph g(a.n);
  for (int s = 0; s < a.slot_count(); ++s)
    if (a.values[s] == alpha) g.edges |= EdgeMask{1} << s;
  return g;
}

TypePartition classify_type(const EdgeWeighting& a) {
  std::vector<int> counts(a.q, 0);
  for (auto v : a.values) ++counts[v];
  TypePartition parts;
  for (int c : counts)
    if (c > 0) parts.push_back(c);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::string format_type(const TypePartition& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

EdgeWeighting parse_point(const std::string& text) {
  auto c1 = text.find(':');
  auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw std::invalid_argument("point literal needs 'q:n:digits'");
  int q, n;
  try {
    q = std::stoi(text.substr(0, c1));
    n = std::stoi(text.substr(c1 + 1, c2 - c1 - 1));
  } catch (...) {
    throw std::invalid_argument("bad q or n in point literal");
  }
  EdgeWeighting a(n, q);
  std::string digits = text.substr(c2 + 1);
  int d = a.slot_count();
  if (q == 2 && digits.rfind("0x", 0) == 0) {
    std::uint64_t mask;
    try {
      size_t used = 0;
      mask = std::stoull(digits.substr(2), &used, 16);
      if (used != digits.size() - 2) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad hex mask in point literal");
    }
    if (d < 64 && (mask >> d))
      throw std::invalid_argument("hex mask wider than C(n,2) bits");
    for (int s = 0; s < d; ++s)
      a.values[s] = static_cast<std::uint8_t>((mask >> (d - 1 - s)) & 1);
    return a;
  }
  if (static_cast<int>(digits.size()) != d)
    throw std::invalid_argument("point needs exactly " + std::to_string(d) +
                                " digits, got " +
                                std::to_string(digits.size()));
  for (int s = 0; s < d; ++s) {
    char c = digits[s];
    if (c < '0' || c >= '0' + q)
      throw std::invalid_argument("digit at position " + std::to_string(s) +
                                  " not in [0," + std::to_string(q) + ")");
    a.values[s] = static_cast<std::uint8_t>(c - '0');
  }
  return a;
}

std::string format_point(const EdgeWeighting& a) {
  std::string out =
      std::to_string(a.q) + ":" + std::to_string(a.n) + ":";
  for (auto v : a.values) out += static_cast<char>('0' + v);
  return out;
}

}  // namespace slopecount
