// SPDX-License-Identifier: Apache-2.0
#include "altgraph/verify.hpp"

#include <gtest/gtest.h>

#include "altgraph/error.hpp"
#include "altgraph/partition.hpp"

namespace altgraph {
namespace {

const CheckResult* find(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

TEST(Matchings, Examples) {
  const CheckResult a = check_matchings(4, 1);
  EXPECT_TRUE(a.pass) << a.detail;
  EXPECT_EQ(a.observed, 3);
  const CheckResult b = check_matchings(5, 2);
  EXPECT_TRUE(b.pass) << b.detail;
  EXPECT_EQ(b.observed, 12);
  for (int n = 4; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) EXPECT_TRUE(check_matchings(n, i).pass) << n << " " << i;
}

TEST(Matchings, PerturbedGraphFails) {
  const int n = 4;
  const CayleyGraph ag = build_family(Family::AG, n);
  const VertexPartition p = blocks_ag(n, 1);
  const Vertex x = p.blocks[0].front();
  Vertex y = 0;
  for (Vertex u : ag.neighbors(x))
    if (block_of(p, u) == std::optional<std::size_t>(1)) y = u;
  std::vector<Edge> kept;
  for (const Edge& e : ag.edges())
    if (!(e.u == std::min(x, y) && e.v == std::max(x, y))) kept.push_back(e);
  ASSERT_EQ(kept.size() + 1, ag.edge_count());
  const CheckResult r = check_matchings(Graph::from_edges(ag.order(), kept), n, 1);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.detail.empty());
}

TEST(EdgeDecomposition, Counts) {
  const CheckResult e4 = check_edge_decomposition(Family::EAG, 4);
  EXPECT_TRUE(e4.pass);
  EXPECT_EQ(e4.predicted, 36);
  EXPECT_EQ(e4.detail, "36 = 12 + 24");
  const CheckResult c4 = check_edge_decomposition(Family::CAG, 4);
  EXPECT_TRUE(c4.pass);
  EXPECT_EQ(c4.predicted, 48);
  EXPECT_EQ(c4.detail, "48 = 12 + 36");
  const CheckResult e5 = check_edge_decomposition(Family::EAG, 5);
  EXPECT_TRUE(e5.pass);
  EXPECT_EQ(e5.detail, "360 = 180 + 180");
  EXPECT_TRUE(check_edge_decomposition(Family::EAG, 6).pass);
  EXPECT_TRUE(check_edge_decomposition(Family::CAG, 5).pass);
  EXPECT_TRUE(check_edge_decomposition(Family::CAG, 6).pass);
  EXPECT_THROW(check_edge_decomposition(Family::AG, 5), InvalidArgument);
}

TEST(SubgraphIsomorphism, Examples) {
  EXPECT_TRUE(check_subgraph_isomorphism(Family::AG, 5, 3).pass);
  EXPECT_TRUE(check_subgraph_isomorphism(Family::EAG, 5, 1).pass);
  const CheckResult k3 = check_subgraph_isomorphism(Family::CAG, 4, 2);
  EXPECT_TRUE(k3.pass);
  EXPECT_EQ(k3.observed, 3);
  EXPECT_THROW(check_subgraph_isomorphism(Family::AG, 3, 1), InvalidArgument);
}

TEST(DecompositionBound, Examples) {
  const CheckResult e5 = check_decomposition_bound(Family::EAG, 5);
  EXPECT_TRUE(e5.pass);
  EXPECT_NEAR(e5.observed, 5, 1e-8);
  EXPECT_NEAR(e5.predicted, 1 + 4, 1e-8);
  const CheckResult c5 = check_decomposition_bound(Family::CAG, 5);
  EXPECT_TRUE(c5.pass);
  EXPECT_NEAR(c5.observed, 5, 1e-8);
  EXPECT_NEAR(c5.predicted, 5 + 0, 1e-8);
  const CheckResult c6 = check_decomposition_bound(Family::CAG, 6);
  EXPECT_TRUE(c6.pass);
  EXPECT_NEAR(c6.observed, 16, 1e-8);
  EXPECT_NEAR(c6.predicted, 11 + 5, 1e-8);
}

TEST(VerifyFamily, Examples) {
  const VerificationReport ag5 = verify_family(Family::AG, 5);
  EXPECT_TRUE(ag5.overall());
  ASSERT_NE(find(ag5, "gap"), nullptr);
  EXPECT_NEAR(find(ag5, "gap")->observed, 2, 1e-8);

  const VerificationReport eag4 = verify_family(Family::EAG, 4);
  EXPECT_TRUE(eag4.overall());
  EXPECT_NEAR(find(eag4, "lambda2_iterative")->observed, 1, 1e-8);

  const VerificationReport cag3 = verify_family(Family::CAG, 3);
  EXPECT_TRUE(cag3.overall());
  EXPECT_NEAR(find(cag3, "lambda2_dense")->observed, -1, 1e-8);
}

TEST(VerifyFamily, CheckOrder) {
  const VerificationReport r = verify_family(Family::EAG, 4);
  std::vector<std::string> names;
  for (const auto& c : r.checks) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{"graph_invariants", "equitable_partition",
                                             "divisor_spectrum", "lambda2_iterative",
                                             "lambda2_dense", "gap", "canonical_cut_ratio",
                                             "cheeger_bracket", "edge_decomposition",
                                             "subgraph_isomorphism", "decomposition_bound"}));
  EXPECT_EQ(r.mode, "full");
  for (const auto& c : r.checks) EXPECT_FALSE(c.claim.empty()) << c.name;
}

TEST(VerifyFamily, AllFamiliesDense) {
  for (Family f : {Family::AG, Family::EAG, Family::CAG})
    for (int n = 3; n <= 6; ++n) {
      const VerificationReport r = verify_family(f, n, {.tol = 1e-6});
      EXPECT_EQ(r.mode, "full");
      for (const auto& c : r.checks)
        EXPECT_TRUE(c.pass) << to_string(f) << n << " " << c.name << ": predicted " << c.predicted
                            << " observed " << c.observed << " " << c.detail;
    }
}

TEST(VerifyFamily, IterativeOnlyAtSeven) {
  for (Family f : {Family::AG, Family::EAG, Family::CAG}) {
    const VerificationReport r = verify_family(f, 7, {.tol = 1e-6});
    EXPECT_TRUE(r.overall()) << to_string(f);
    EXPECT_EQ(r.mode, "partial (iterative)");
    EXPECT_EQ(find(r, "lambda2_dense"), nullptr);
    EXPECT_FALSE(r.notes.empty());
  }
}

TEST(VerifyFamily, Errors) {
  EXPECT_THROW(verify_family(Family::AG, 2), InvalidArgument);
  EXPECT_THROW(verify_family(Family::AG, 10), CapExceeded);
  EXPECT_THROW(verify_family(Family::Custom, 5), InvalidArgument);
}

}  // namespace
}  // namespace altgraph
