// SPDX-License-Identifier: Apache-2.0
#include "altgraph/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "altgraph/error.hpp"
#include "altgraph/partition.hpp"

namespace altgraph {

namespace {

std::vector<bool> membership(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw InvalidArgument("cut subset is empty");
  std::vector<bool> in(g.order(), false);
  for (Vertex v : subset) {
    if (v >= g.order()) throw RangeError("cut vertex " + std::to_string(v) + " out of range");
    if (in[v]) throw InvalidArgument("cut vertex " + std::to_string(v) + " repeated");
    in[v] = true;
  }
  if (subset.size() == g.order()) throw InvalidArgument("cut subset is the whole vertex set");
  return in;
}

// Lexicographic comparison of the sorted index sequences of two subsets.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  const int x = std::countr_zero(diff);
  const std::uint64_t above = x == 63 ? 0 : (~std::uint64_t{0} << (x + 1));
  if (a & (std::uint64_t{1} << x)) return (b & above) != 0;
  return (a & above) == 0;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t boundary_size(const Graph& g, std::span<const Vertex> subset) {
  const auto in = membership(g, subset);
  std::size_t count = 0;
  for (Vertex u : subset)
    for (Vertex v : g.neighbors(u))
      if (!in[v]) ++count;
  return count;
}

std::size_t boundary_size_edge_filter(const Graph& g, std::span<const Vertex> subset) {
  membership(g, subset);
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  auto contains = [&](Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); };
  std::size_t count = 0;
  for (const Edge& e : g.edges())
    if (contains(e.u) != contains(e.v)) ++count;
  return count;
}

CutReport cut_ratio(const Graph& g, std::span<const Vertex> subset, std::string description) {
  CutReport r;
  r.boundary = boundary_size(g, subset);
  r.subset_size = subset.size();
  r.complement_size = g.order() - subset.size();
  r.ratio = Rational(static_cast<long long>(r.boundary),
                     static_cast<long long>(std::min(r.subset_size, r.complement_size)));
  r.description = std::move(description);
  return r;
}

CutReport canonical_cut(const CayleyGraph& g, int i) {
  const int n = g.n();
  const int position = recursive_block_position(g.family(), n);
  const auto subset = block_vertices(n, position, i);
  std::string label;
  switch (g.family()) {
    case Family::AG: label = "X(" + std::to_string(i) + ")"; break;
    default: label = "X_" + std::to_string(i) + "(" + std::to_string(position) + ")"; break;
  }
  return cut_ratio(g, subset, label);
}

CheegerBounds cheeger_bounds(double mu, double delta) {
  constexpr double kSlack = 1e-9;
  if (!(delta >= 0) || !(mu >= -kSlack) || !(mu <= 2 * delta + kSlack))
    throw RangeError("cheeger_bounds needs 0 <= mu <= 2 delta");
  mu = std::clamp(mu, 0.0, 2 * delta);
  return {mu / 2, std::sqrt(mu * (2 * delta - mu))};
}

IsoperimetricResult brute_force_h(const Graph& g, std::size_t max_order) {
  const std::size_t n = g.order();
  if (n < 2) throw InvalidArgument("brute_force_h needs order >= 2");
  if (n > max_order || n > 62)
    throw CapExceeded("brute_force_h order " + std::to_string(n) + " above the cap " +
                      std::to_string(std::min<std::size_t>(max_order, 62)));

  std::vector<std::uint64_t> adjacency(n, 0);
  std::vector<long long> degree(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) adjacency[u] |= std::uint64_t{1} << v;
    degree[u] = static_cast<long long>(g.degree(u));
  }

  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::uint64_t subset = 0;
  long long size = 0;
  long long boundary = 0;
  bool have_best = false;
  Rational best;
  std::uint64_t best_subset = 0;
  for (std::uint64_t step = 1; step <= full; ++step) {
    const int v = std::countr_zero(step);
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (subset & bit) {
      subset &= ~bit;
      boundary -= degree[v] - 2 * std::popcount(adjacency[v] & subset);
      --size;
    } else {
      boundary += degree[v] - 2 * std::popcount(adjacency[v] & subset);
      subset |= bit;
      ++size;
    }
    if (subset == full || subset == 0) continue;
    const Rational ratio(boundary, std::min<long long>(size, static_cast<long long>(n) - size));
    if (!have_best || ratio < best || (ratio == best && lex_less(subset, best_subset))) {
      have_best = true;
      best = ratio;
      best_subset = subset;
    }
  }
  IsoperimetricResult out{best, {}};
  for (Vertex v = 0; v < n; ++v)
    if (best_subset & (std::uint64_t{1} << v)) out.witness.push_back(v);
  return out;
}

std::pair<Rational, Rational> corollary_bounds(Family family, int n) {
  const long long m = n;
  switch (family) {
    case Family::AG:
      if (n < 4) throw InvalidArgument("AG isoperimetric bounds need n >= 4");
      return {Rational(1), Rational(2)};
    case Family::EAG:
      if (n < 3) throw InvalidArgument("EAG isoperimetric bounds need n >= 3");
      return {Rational(2 * m - 3, 2), Rational(2 * m - 4)};
    case Family::CAG:
      if (n < 3) throw InvalidArgument("CAG isoperimetric bounds need n >= 3");
      return {Rational(m * m - 2 * m, 2), Rational(m * m - 3 * m + 2)};
    case Family::Custom: break;
  }
  throw InvalidArgument("custom graphs have no closed-form isoperimetric bounds");
}

}  // namespace altgraph
