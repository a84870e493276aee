// SPDX-License-Identifier: Apache-2.0
#include "altgraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "altgraph/cheeger.hpp"
#include "altgraph/error.hpp"
#include "altgraph/partition.hpp"
#include "altgraph/spectra.hpp"

namespace altgraph {

namespace {

template <typename Fn>
CheckResult timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r = fn();
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CheckResult make_check(std::string name, std::string claim, double predicted, double observed,
                       double tolerance, bool pass, std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.claim = std::move(claim);
  r.predicted = predicted;
  r.observed = observed;
  r.tolerance = tolerance;
  r.pass = pass;
  r.detail = std::move(detail);
  return r;
}

std::string family_graph(Family f, const std::string& n) { return to_string(f) + "_" + n; }

double lambda2_of(const Graph& g, const VerifyOptions& options) {
  if (g.order() <= options.dense_max_order) return dense_spectrum(g, options.tol).lambda2;
  return lambda2_iterative(g, options.tol, {options.seed, kDefaultMaxIterations}).lambda2;
}

// Edges of g whose endpoints both lie in one block, in original numbering.
std::vector<Edge> block_internal_edges(const Graph& g, const VertexPartition& blocks) {
  std::vector<Edge> out;
  for (const auto& block : blocks.blocks) {
    const auto [sub, map] = induced_subgraph(g, block);
    for (const Edge& e : sub.edges()) {
      const Vertex u = map.target[e.u];
      const Vertex v = map.target[e.v];
      out.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool VerificationReport::overall() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

CheckResult check_matchings(const Graph& ag, int n, int i) {
  const VertexPartition p = blocks_ag(n, i);
  if (ag.order() != alternating_order(n)) throw DimensionError("graph order does not match A_n");
  std::vector<std::size_t> owner(ag.order());
  for (std::size_t b = 0; b < p.size(); ++b)
    for (Vertex v : p.blocks[b]) owner[v] = b;

  const auto& x_block = p.blocks[0];
  std::vector<Vertex> y_partner;
  std::vector<Vertex> z_partner;
  std::string detail;
  bool pass = true;
  for (Vertex x : x_block) {
    std::vector<Vertex> ys;
    std::vector<Vertex> zs;
    for (Vertex u : ag.neighbors(x)) {
      if (owner[u] == 1) ys.push_back(u);
      if (owner[u] == 2) zs.push_back(u);
    }
    if (ys.size() != 1 || zs.size() != 1) {
      if (pass)
        detail = "vertex " + std::to_string(x) + " has " + std::to_string(ys.size()) +
                 " Y-neighbors and " + std::to_string(zs.size()) + " Z-neighbors";
      pass = false;
      continue;
    }
    y_partner.push_back(ys.front());
    z_partner.push_back(zs.front());
  }
  auto distinct = [](std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  };
  const std::size_t y_matched = distinct(y_partner);
  const std::size_t z_matched = distinct(z_partner);
  if (pass && (y_matched != x_block.size() || z_matched != x_block.size())) {
    pass = false;
    detail = "two X vertices share a Y or Z partner";
  }
  return make_check("matchings i=" + std::to_string(i),
                    "edges X(i)-Y(i) and X(i)-Z(i) form perfect matchings",
                    static_cast<double>(x_block.size()),
                    static_cast<double>(std::min(y_matched, z_matched)), 0, pass, detail);
}

CheckResult check_matchings(int n, int i) {
  if (n < 4) throw InvalidArgument("check_matchings needs n >= 4");
  return check_matchings(build_family(Family::AG, n), n, i);
}

CheckResult check_edge_decomposition(Family family, int n) {
  if (n < 4) throw InvalidArgument("check_edge_decomposition needs n >= 4");
  if (family != Family::EAG && family != Family::CAG)
    throw InvalidArgument("edge decomposition is defined for EAG and CAG");
  const CayleyGraph whole = build_family(family, n);
  std::vector<Edge> internal;
  std::vector<Edge> spanning;
  std::string claim;
  if (family == Family::EAG) {
    internal = block_internal_edges(whole, blocks_xij(n, 2));
    spanning = build_family(Family::AG, n).edges();
    claim = "E(EAG_n) = disjoint union of E(EAG_n[X_i(2)]) and E(AG_n)";
  } else {
    internal = block_internal_edges(whole, blocks_xij(n, 1));
    spanning = build_family(Family::EAG, n).edges();
    claim = "E(CAG_n) = disjoint union of E(EAG_n) and E(CAG_n[X_i(1)])";
  }
  std::vector<Edge> overlap;
  std::set_intersection(internal.begin(), internal.end(), spanning.begin(), spanning.end(),
                        std::back_inserter(overlap));
  std::vector<Edge> joined;
  std::merge(internal.begin(), internal.end(), spanning.begin(), spanning.end(),
             std::back_inserter(joined));
  const std::vector<Edge> expected = whole.edges();
  const bool pass = overlap.empty() && joined == expected;
  std::string detail = std::to_string(expected.size()) + " = " + std::to_string(internal.size()) +
                       " + " + std::to_string(spanning.size());
  if (!overlap.empty()) detail += "; " + std::to_string(overlap.size()) + " shared edges";
  return make_check("edge_decomposition", claim, static_cast<double>(expected.size()),
                    static_cast<double>(internal.size() + spanning.size()), 0, pass, detail);
}

CheckResult check_subgraph_isomorphism(Family family, int n, int i) {
  if (n < 4) throw InvalidArgument("check_subgraph_isomorphism needs n >= 4");
  const CayleyGraph whole = build_family(family, n);
  const CayleyGraph smaller = build_family(family, n - 1);
  const auto block = block_vertices(n, recursive_block_position(family, n), i);
  const auto [sub, to_original] = induced_subgraph(whole, block);
  const VertexMap phi = phi_isomorphism(n, i, family);
  const bool pass = is_injective(phi) && is_isomorphism(sub, smaller, then(to_original, phi));
  return make_check("subgraph_isomorphism i=" + std::to_string(i),
                    "recursive block of " + family_graph(family, "n") + " induces " +
                        family_graph(family, "{n-1}"),
                    static_cast<double>(smaller.edge_count()), static_cast<double>(sub.edge_count()),
                    0, pass);
}

CheckResult check_decomposition_bound(Family family, int n, const VerifyOptions& options) {
  if (n < 4) throw InvalidArgument("check_decomposition_bound needs n >= 4");
  double lhs = 0;
  double rhs = 0;
  std::string claim;
  if (family == Family::EAG) {
    lhs = lambda2_of(build_family(Family::EAG, n), options);
    rhs = lambda2_of(build_family(Family::EAG, n - 1), options) +
          lambda2_of(build_family(Family::AG, n), options);
    claim = "lambda2(EAG_n) <= lambda2(EAG_{n-1}) + lambda2(AG_n)";
  } else if (family == Family::CAG) {
    lhs = lambda2_of(build_family(Family::CAG, n), options);
    rhs = lambda2_of(build_family(Family::EAG, n), options) +
          lambda2_of(build_family(Family::CAG, n - 1), options);
    claim = "lambda2(CAG_n) <= lambda2(EAG_n) + lambda2(CAG_{n-1})";
  } else {
    throw InvalidArgument("decomposition bound is defined for EAG and CAG");
  }
  return make_check("decomposition_bound", claim, rhs, lhs, options.tol, lhs <= rhs + options.tol);
}

VerificationReport verify_family(Family family, int n, const VerifyOptions& options) {
  if (family == Family::Custom) throw InvalidArgument("verify_family needs AG, EAG or CAG");
  if (n < 3) throw InvalidArgument("verify_family needs n >= 3");
  if (n > options.max_points)
    throw CapExceeded("verify_family n=" + std::to_string(n) + " above the build cap " +
                      std::to_string(options.max_points));

  VerificationReport report;
  report.family = family;
  report.n = n;
  const std::string name = family_graph(family, "n");
  const CayleyGraph g = build_family(family, n, {options.max_points});
  const Predicted expect = predicted(family, n);
  const double tol = options.tol;
  const bool dense = g.order() <= options.dense_max_order;
  report.mode = dense ? "full" : "partial (iterative)";
  const bool has_partition = family != Family::AG || n >= 4;

  report.checks.push_back(timed([&] {
    const auto violation = find_invariant_violation(g);
    const bool regular = g.regular_degree() == g.cayley_degree() &&
                         g.cayley_degree() == expected_generator_count(family, n);
    const std::size_t edges = g.order() * g.cayley_degree() / 2;
    const bool pass = !violation && regular && g.edge_count() == edges && is_connected(g);
    return make_check("graph_invariants", name + " is a connected simple regular graph",
                      static_cast<double>(edges), static_cast<double>(g.edge_count()), 0, pass,
                      violation.value_or(""));
  }));

  if (has_partition) {
    report.checks.push_back(timed([&] {
      const DivisorMatrix expected = divisor_closed_form(family, n);
      int matched = 0;
      std::string detail;
      for (int i = 1; i <= n; ++i) {
        const auto result = check_equitable(g, family_partition(family, n, i));
        if (const auto* b = std::get_if<DivisorMatrix>(&result); b && *b == expected) {
          ++matched;
        } else if (detail.empty()) {
          detail = "i=" + std::to_string(i) + ": " +
                   (b ? std::string("divisor matrix differs")
                      : describe(std::get<EquitableCounterexample>(result)));
        }
      }
      return make_check("equitable_partition", "block partitions are equitable with the closed-form divisor matrix",
                        n, matched, 0, matched == n, detail);
    }));

    report.checks.push_back(timed([&] {
      const auto observed = divisor_spectrum(divisor_closed_form(family, n));
      const auto expected = closed_form_divisor_eigenvalues(family, n);
      double worst = observed.size() == expected.size() ? 0.0 : INFINITY;
      for (std::size_t k = 0; k < std::min(observed.size(), expected.size()); ++k)
        worst = std::max(worst, std::abs(observed[k] - expected[k]));
      return make_check("divisor_spectrum", "divisor matrix eigenvalues match the closed form", 0,
                        worst, tol, worst <= tol);
    }));
  }

  report.checks.push_back(timed([&] {
    const auto it = lambda2_iterative(g, tol, {options.seed, kDefaultMaxIterations});
    const double diff = std::abs(it.lambda2 - static_cast<double>(expect.lambda2));
    return make_check("lambda2_iterative", "lambda2(" + name + ") closed form",
                      static_cast<double>(expect.lambda2), it.lambda2, tol, diff <= tol);
  }));

  std::optional<SpectrumReport> dense_report;
  if (dense) {
    report.checks.push_back(timed([&] {
      dense_report = dense_spectrum(g, tol);
      const double diff = std::abs(dense_report->lambda2 - static_cast<double>(expect.lambda2));
      return make_check("lambda2_dense", "lambda2(" + name + ") closed form",
                        static_cast<double>(expect.lambda2), dense_report->lambda2, tol,
                        diff <= tol && std::abs(dense_report->lambda1 - expect.lambda1) <= tol);
    }));
  }

  report.checks.push_back(timed([&] {
    const double gap = spectral_gap(g, tol, {options.seed, kDefaultMaxIterations});
    return make_check("gap", "adjacency spectral gap of " + name + " closed form",
                      static_cast<double>(expect.gap), gap, 2 * tol,
                      std::abs(gap - static_cast<double>(expect.gap)) <= 2 * tol);
  }));

  if (has_partition) {
    report.checks.push_back(timed([&] {
      const CutReport cut = canonical_cut(g, 1);
      const Rational upper = corollary_bounds(family, n).second;
      return make_check("canonical_cut_ratio", "canonical block cut attains the isoperimetric upper bound",
                        upper.value(), cut.ratio.value(), 0, cut.ratio == upper,
                        cut.description + ": |dS|=" + std::to_string(cut.boundary) + ", |S|=" +
                            std::to_string(cut.subset_size));
    }));
  }

  if (g.order() <= options.brute_force_max_order) {
    report.checks.push_back(timed([&] {
      const auto h = brute_force_h(g, options.brute_force_max_order);
      const double mu = dense_report ? dense_report->gap : static_cast<double>(expect.gap);
      const auto bounds = cheeger_bounds(mu, static_cast<double>(g.max_degree()));
      // The upper Cheeger bound does not apply to K_1, K_2, K_3.
      const bool upper_applies = g.order() > 3;
      bool pass = h.h.value() >= bounds.lower - 1e-9 &&
                  (!upper_applies || h.h.value() <= bounds.upper + 1e-9);
      if (has_partition) {
        const auto [lo, hi] = corollary_bounds(family, n);
        pass = pass && lo <= h.h && h.h <= hi;
      }
      return make_check("cheeger_bracket", "mu/2 <= h <= sqrt(mu(2 Delta - mu))", bounds.lower,
                        h.h.value(), 1e-9, pass, "h=" + h.h.str());
    }));
  }

  if (n >= 4) {
    if (family == Family::AG) {
      report.checks.push_back(timed([&] {
        int passed = 0;
        std::string detail;
        for (int i = 1; i <= n; ++i) {
          const CheckResult c = check_matchings(g, n, i);
          if (c.pass) ++passed;
          else if (detail.empty()) detail = c.name + ": " + c.detail;
        }
        return make_check("matchings", "edges X(i)-Y(i) and X(i)-Z(i) form perfect matchings", n,
                          passed, 0, passed == n, detail);
      }));
    } else {
      report.checks.push_back(timed([&] { return check_edge_decomposition(family, n); }));
    }

    report.checks.push_back(timed([&] {
      int passed = 0;
      for (int i = 1; i <= n; ++i)
        if (check_subgraph_isomorphism(family, n, i).pass) ++passed;
      return make_check("subgraph_isomorphism",
                        "recursive blocks of " + name + " induce " + family_graph(family, "{n-1}"), n,
                        passed, 0, passed == n);
    }));

    if (family != Family::AG) {
      report.checks.push_back(timed([&] { return check_decomposition_bound(family, n, options); }));
    }
  }

  if (family == Family::CAG && n >= 4)
    report.notes.push_back(
        "induction bound compares lambda2(CAG_n) with lambda2(EAG_n) + lambda2(CAG_{n-1})");
  if (!dense) report.notes.push_back("order above the dense cap; lambda2 from the iterative solver only");
  return report;
}

}  // namespace altgraph
