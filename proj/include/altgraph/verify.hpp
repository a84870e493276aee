// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "altgraph/cayley.hpp"
#include "altgraph/graph.hpp"

namespace altgraph {

/// One predicted-versus-observed comparison. `claim` states the property
/// being checked.
struct CheckResult {
  std::string name;
  std::string claim;
  double predicted = 0;
  double observed = 0;
  double tolerance = 0;
  bool pass = false;
  double millis = 0;
  std::string detail;
};

struct VerificationReport {
  Family family = Family::Custom;
  int n = 0;
  // "full" when the dense solver ran, "partial (iterative)" otherwise.
  std::string mode;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool overall() const noexcept;
};

struct VerifyOptions {
  double tol = 1e-8;
  std::uint64_t seed = 42;
  // Dense cross-checks run only up to this order (n <= 6).
  std::size_t dense_max_order = 400;
  std::size_t brute_force_max_order = 20;
  int max_points = kDefaultMaxBuildPoints;
};

/// Every vertex of X(i) has exactly one neighbor in Y(i) and one in Z(i),
/// and those edges are pairwise disjoint. The graph overload lets callers
/// check a modified copy of AG_n.
CheckResult check_matchings(int n, int i);
CheckResult check_matchings(const Graph& ag, int n, int i);

/// EAG: E(EAG_n) is the disjoint union of the edges inside the blocks
/// X_i(2) and E(AG_n). CAG: E(CAG_n) is the disjoint union of E(EAG_n) and
/// the edges inside the blocks X_i(1). Exact edge-set comparison.
CheckResult check_edge_decomposition(Family family, int n);

/// phi_isomorphism(n, i, family) is an isomorphism from the induced
/// subgraph on the recursive block onto an independently built
/// (n-1)-point graph of the same family.
CheckResult check_subgraph_isomorphism(Family family, int n, int i);

/// lambda2(EAG_n) <= lambda2(EAG_{n-1}) + lambda2(AG_n) and
/// lambda2(CAG_n) <= lambda2(EAG_n) + lambda2(CAG_{n-1}), on solver output.
CheckResult check_decomposition_bound(Family family, int n, const VerifyOptions& options = {});

/// Runs the full check list for one family and n. Check failures are
/// recorded in the report; solver failures propagate as exceptions.
VerificationReport verify_family(Family family, int n, const VerifyOptions& options = {});

}  // namespace altgraph
