// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "altgraph/cayley.hpp"
#include "altgraph/dense.hpp"
#include "altgraph/graph.hpp"

namespace altgraph {

/// Disjoint, nonempty, sorted vertex blocks covering the whole vertex set.
struct VertexPartition {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::string> labels;

  std::size_t size() const noexcept { return blocks.size(); }
};

/// Throws InvalidArgument unless `p` partitions {0..order-1}. Sorts nothing;
/// blocks must already be ascending.
void validate_partition(const VertexPartition& p, std::size_t order);

/// Block index containing v (binary search per block), or nullopt.
std::optional<std::size_t> block_of(const VertexPartition& p, Vertex v);

/// Block-level neighbor counts b_ij of an equitable partition. When the
/// block sizes are known they are kept alongside.
struct DivisorMatrix {
  IntMatrix entries;
  std::vector<std::size_t> block_sizes;

  Eigen::Index k() const noexcept { return entries.rows(); }
  friend bool operator==(const DivisorMatrix& a, const DivisorMatrix& b) {
    return a.entries.rows() == b.entries.rows() && a.entries.cols() == b.entries.cols() &&
           a.entries == b.entries;
  }
};

/// Why a partition is not equitable: vertices `reference` and `offender` of
/// block `block` have different neighbor counts toward `toward`.
struct EquitableCounterexample {
  std::size_t block = 0;
  std::size_t toward = 0;
  Vertex reference = 0;
  std::size_t reference_count = 0;
  Vertex offender = 0;
  std::size_t offender_count = 0;
};

std::string describe(const EquitableCounterexample& c);

using EquitableResult = std::variant<DivisorMatrix, EquitableCounterexample>;

/// Divisor matrix of `p` if it is equitable, else the first counterexample
/// in ascending vertex order.
EquitableResult check_equitable(const Graph& g, const VertexPartition& p);

/// X_value(position) = { t in A_n : t_position = value }, ascending.
std::vector<Vertex> block_vertices(int n, int position, int value);

/// X(i), Y(i), Z(i), W(i) with t_n = i, t_1 = i, t_2 = i, and none of these.
VertexPartition blocks_ag(int n, int i);

/// Without by_value_i: X_1(j), ..., X_n(j). With it: X_i(1), ..., X_i(n)
/// (j is then ignored), the partition used for EAG and CAG.
VertexPartition blocks_xij(int n, int j, std::optional<int> by_value_i = std::nullopt);

/// The partition whose divisor matrix is divisor_closed_form(family, n).
VertexPartition family_partition(Family family, int n, int i);

DivisorMatrix divisor_closed_form(Family family, int n);

/// Eigenvalues of the divisor matrix's closed-form factorization, descending
/// with multiplicity.
std::vector<double> closed_form_divisor_eigenvalues(Family family, int n);

/// All eigenvalues, descending. Matrices that are symmetric, or symmetrizable
/// by a positive diagonal similarity (every equitable-partition divisor
/// matrix is), go through the Jacobi solver; anything else goes through the
/// characteristic polynomial and its companion matrix and must have real
/// roots within 1e-8.
std::vector<double> divisor_spectrum(const DivisorMatrix& b);
std::vector<double> divisor_spectrum(const DenseMatrix<double>& b);

/// Coefficients c_0..c_k of det(x I - B) = x^k + c_{k-1} x^{k-1} + ... + c_0,
/// by Faddeev-LeVerrier.
std::vector<double> characteristic_polynomial(const DenseMatrix<double>& b);

}  // namespace altgraph
