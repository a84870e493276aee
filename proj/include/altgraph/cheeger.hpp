// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "altgraph/cayley.hpp"
#include "altgraph/graph.hpp"

namespace altgraph {

/// Exact nonnegative-denominator fraction in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(long long num, long long den = 1);

  long long num() const noexcept { return num_; }
  long long den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

struct CutReport {
  std::size_t subset_size = 0;
  std::size_t complement_size = 0;
  std::size_t boundary = 0;
  Rational ratio;
  std::string description;
};

/// |∂S| by scanning neighbor lists of S. S must be a proper nonempty subset
/// without duplicates.
std::size_t boundary_size(const Graph& g, std::span<const Vertex> subset);

/// |∂S| by filtering the canonical edge list; independent of boundary_size.
std::size_t boundary_size_edge_filter(const Graph& g, std::span<const Vertex> subset);

CutReport cut_ratio(const Graph& g, std::span<const Vertex> subset, std::string description = {});

/// The family's canonical cut: X(i) for AG, X_i(2) for EAG, X_i(1) for CAG.
CutReport canonical_cut(const CayleyGraph& g, int i);

struct CheegerBounds {
  double lower = 0;
  double upper = 0;
};

/// (mu / 2, sqrt(mu (2 delta - mu))). Requires 0 <= mu <= 2 delta (up to
/// 1e-9 rounding slack).
CheegerBounds cheeger_bounds(double mu, double delta);

inline constexpr std::size_t kDefaultBruteForceMaxOrder = 20;

struct IsoperimetricResult {
  Rational h;
  std::vector<Vertex> witness;
};

/// Exact h(G) over all proper nonempty subsets in Gray-code order. Among
/// minimizers the lexicographically least sorted witness is returned.
IsoperimetricResult brute_force_h(const Graph& g,
                                  std::size_t max_order = kDefaultBruteForceMaxOrder);

/// Closed-form lower and upper bounds on h for the family graph.
std::pair<Rational, Rational> corollary_bounds(Family family, int n);

}  // namespace altgraph
