// SPDX-License-Identifier: Apache-2.0
#include "altgraph/partition.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>

#include <Eigen/Eigenvalues>

#include "altgraph/error.hpp"

namespace altgraph {

namespace {

constexpr double kSymmetricTolerance = 1e-10;
constexpr double kImaginaryTolerance = 1e-8;

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

void require_points(int n, int minimum, const char* what) {
  if (n < minimum)
    throw InvalidArgument(std::string(what) + " needs n >= " + std::to_string(minimum));
  if (n > kMaxEnumeratePoints)
    throw CapExceeded(std::string(what) + " supports n <= " + std::to_string(kMaxEnumeratePoints));
}

// Weights w > 0 with w_i b_ij = w_j b_ji for all i, j, if they exist.
std::optional<std::vector<double>> symmetrizing_weights(const DenseMatrix<double>& b) {
  const Eigen::Index k = b.rows();
  std::vector<double> w(static_cast<std::size_t>(k), 0.0);
  for (Eigen::Index root = 0; root < k; ++root) {
    if (w[root] != 0.0) continue;
    w[root] = 1.0;
    std::queue<Eigen::Index> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Eigen::Index i = frontier.front();
      frontier.pop();
      for (Eigen::Index j = 0; j < k; ++j) {
        if (i == j || b(i, j) == 0.0) continue;
        if (b(j, i) == 0.0 || (b(i, j) > 0) != (b(j, i) > 0)) return std::nullopt;
        if (w[j] == 0.0) {
          w[j] = w[i] * b(i, j) / b(j, i);
          frontier.push(j);
        }
      }
    }
  }
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      const double lhs = w[i] * b(i, j);
      const double rhs = w[j] * b(j, i);
      if (std::abs(lhs - rhs) > 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)}))
        return std::nullopt;
    }
  return w;
}

std::vector<double> symmetric_route(const DenseMatrix<double>& b, const std::vector<double>& w) {
  const Eigen::Index k = b.rows();
  DenseMatrix<double> s(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) s(i, j) = std::sqrt(w[i] / w[j]) * b(i, j);
  s = (0.5 * (s + s.transpose())).eval();
  const auto eig = jacobi_eigen(s, kSymmetricTolerance * 1e-3, /*want_vectors=*/false);
  return {eig.values.data(), eig.values.data() + eig.values.size()};
}

std::vector<double> companion_route(const DenseMatrix<double>& b) {
  const auto coeffs = characteristic_polynomial(b);
  const auto k = static_cast<Eigen::Index>(coeffs.size()) - 1;
  DenseMatrix<double> companion = DenseMatrix<double>::Zero(k, k);
  for (Eigen::Index r = 1; r < k; ++r) companion(r, r - 1) = 1.0;
  for (Eigen::Index r = 0; r < k; ++r) companion(r, k - 1) = -coeffs[r];
  Eigen::EigenSolver<DenseMatrix<double>> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("companion eigensolver failed", 0.0);
  std::vector<double> out;
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  for (Eigen::Index r = 0; r < k; ++r) {
    const std::complex<double> z = solver.eigenvalues()[r];
    if (std::abs(z.imag()) > kImaginaryTolerance * scale)
      throw ComputationError("divisor matrix has a non-real eigenvalue");
    out.push_back(z.real());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

void validate_partition(const VertexPartition& p, std::size_t order) {
  if (!p.labels.empty() && p.labels.size() != p.blocks.size())
    throw InvalidArgument("partition has " + std::to_string(p.labels.size()) + " labels for " +
                          std::to_string(p.blocks.size()) + " blocks");
  std::vector<bool> covered(order, false);
  std::size_t total = 0;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const auto& block = p.blocks[b];
    if (block.empty()) throw InvalidArgument("partition block " + std::to_string(b) + " is empty");
    if (!std::is_sorted(block.begin(), block.end()))
      throw InvalidArgument("partition block " + std::to_string(b) + " is not sorted");
    for (Vertex v : block) {
      if (v >= order) throw InvalidArgument("partition vertex " + std::to_string(v) + " out of range");
      if (covered[v]) throw InvalidArgument("partition vertex " + std::to_string(v) + " repeated");
      covered[v] = true;
    }
    total += block.size();
  }
  if (total != order)
    throw InvalidArgument("partition covers " + std::to_string(total) + " of " +
                          std::to_string(order) + " vertices");
}

std::optional<std::size_t> block_of(const VertexPartition& p, Vertex v) {
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    if (std::binary_search(p.blocks[b].begin(), p.blocks[b].end(), v)) return b;
  return std::nullopt;
}

std::string describe(const EquitableCounterexample& c) {
  return "block " + std::to_string(c.block) + ": vertex " + std::to_string(c.reference) + " has " +
         std::to_string(c.reference_count) + " neighbors in block " + std::to_string(c.toward) +
         " but vertex " + std::to_string(c.offender) + " has " + std::to_string(c.offender_count);
}

EquitableResult check_equitable(const Graph& g, const VertexPartition& p) {
  validate_partition(p, g.order());
  const std::size_t k = p.size();
  std::vector<std::size_t> owner(g.order());
  for (std::size_t b = 0; b < k; ++b)
    for (Vertex v : p.blocks[b]) owner[v] = b;

  IntMatrix rows = IntMatrix::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  std::vector<Vertex> reference(k);
  std::vector<bool> seen(k, false);
  std::vector<std::size_t> counts(k);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Vertex u : g.neighbors(v)) ++counts[owner[u]];
    const std::size_t b = owner[v];
    if (!seen[b]) {
      seen[b] = true;
      reference[b] = v;
      for (std::size_t j = 0; j < k; ++j)
        rows(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(j)) =
            static_cast<long long>(counts[j]);
      continue;
    }
    for (std::size_t j = 0; j < k; ++j) {
      const auto expected = static_cast<std::size_t>(
          rows(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(j)));
      if (counts[j] != expected) return EquitableCounterexample{b, j, reference[b], expected, v, counts[j]};
    }
  }
  DivisorMatrix out{rows, {}};
  for (const auto& block : p.blocks) out.block_sizes.push_back(block.size());
  return out;
}

std::vector<Vertex> block_vertices(int n, int position, int value) {
  require_points(n, 3, "block_vertices");
  if (position < 1 || position > n || value < 1 || value > n)
    throw RangeError("block position/value outside {1.." + std::to_string(n) + "}");
  std::vector<Vertex> out;
  detail::for_each_alternating(n, [&](std::uint64_t v, const std::uint8_t* images) {
    if (images[position - 1] == value - 1) out.push_back(static_cast<Vertex>(v));
  });
  return out;
}

VertexPartition blocks_ag(int n, int i) {
  require_points(n, 4, "blocks_ag");
  if (i < 1 || i > n) throw RangeError("block value outside {1.." + std::to_string(n) + "}");
  VertexPartition p;
  p.blocks.resize(4);
  const std::string tag = std::to_string(i);
  p.labels = {"X(" + tag + ")", "Y(" + tag + ")", "Z(" + tag + ")", "W(" + tag + ")"};
  const auto value = static_cast<std::uint8_t>(i - 1);
  detail::for_each_alternating(n, [&](std::uint64_t v, const std::uint8_t* images) {
    std::size_t b = 3;
    if (images[n - 1] == value) b = 0;
    else if (images[0] == value) b = 1;
    else if (images[1] == value) b = 2;
    p.blocks[b].push_back(static_cast<Vertex>(v));
  });
  return p;
}

VertexPartition blocks_xij(int n, int j, std::optional<int> by_value_i) {
  require_points(n, 3, "blocks_xij");
  VertexPartition p;
  p.blocks.resize(static_cast<std::size_t>(n));
  if (by_value_i) {
    const int i = *by_value_i;
    if (i < 1 || i > n) throw RangeError("block value outside {1.." + std::to_string(n) + "}");
    for (int pos = 1; pos <= n; ++pos)
      p.labels.push_back("X_" + std::to_string(i) + "(" + std::to_string(pos) + ")");
    detail::for_each_alternating(n, [&](std::uint64_t v, const std::uint8_t* images) {
      const auto* hit = std::find(images, images + n, static_cast<std::uint8_t>(i - 1));
      p.blocks[static_cast<std::size_t>(hit - images)].push_back(static_cast<Vertex>(v));
    });
  } else {
    if (j < 1 || j > n) throw RangeError("block position outside {1.." + std::to_string(n) + "}");
    for (int val = 1; val <= n; ++val)
      p.labels.push_back("X_" + std::to_string(val) + "(" + std::to_string(j) + ")");
    detail::for_each_alternating(n, [&](std::uint64_t v, const std::uint8_t* images) {
      p.blocks[images[j - 1]].push_back(static_cast<Vertex>(v));
    });
  }
  return p;
}

VertexPartition family_partition(Family family, int n, int i) {
  switch (family) {
    case Family::AG: return blocks_ag(n, i);
    case Family::EAG:
    case Family::CAG: return blocks_xij(n, 1, i);
    case Family::Custom: break;
  }
  throw InvalidArgument("custom graphs have no closed-form partition");
}

DivisorMatrix divisor_closed_form(Family family, int n) {
  DivisorMatrix b;
  const long long m = n;
  switch (family) {
    case Family::AG: {
      require_points(n, 4, "AG divisor matrix");
      b.entries.resize(4, 4);
      b.entries << 2 * m - 6, 1, 1, 0,
                   1, 0, m - 2, m - 3,
                   1, m - 2, 0, m - 3,
                   0, 1, 1, 2 * m - 6;
      const std::size_t third = factorial(n - 1) / 2;
      b.block_sizes = {third, third, third, static_cast<std::size_t>(n - 3) * third};
      return b;
    }
    case Family::EAG: {
      require_points(n, 3, "EAG divisor matrix");
      b.entries = IntMatrix::Ones(n, n);
      b.entries.diagonal().setConstant((m - 2) * (m - 3));
      b.entries.row(0).setConstant(m - 2);
      b.entries.col(0).setConstant(m - 2);
      b.entries(0, 0) = 0;
      b.block_sizes.assign(static_cast<std::size_t>(n), factorial(n - 1) / 2);
      return b;
    }
    case Family::CAG: {
      require_points(n, 3, "CAG divisor matrix");
      b.entries = IntMatrix::Constant(n, n, m - 2);
      b.entries.diagonal().setConstant(2 * binomial(m - 1, 3));
      b.block_sizes.assign(static_cast<std::size_t>(n), factorial(n - 1) / 2);
      return b;
    }
    case Family::Custom: break;
  }
  throw InvalidArgument("custom graphs have no closed-form divisor matrix");
}

std::vector<double> closed_form_divisor_eigenvalues(Family family, int n) {
  const double m = n;
  std::vector<double> out;
  switch (family) {
    case Family::AG:
      require_points(n, 4, "AG divisor eigenvalues");
      out = {2 * m - 4, 2 * m - 6, m - 4, 2 - m};
      break;
    case Family::EAG:
      require_points(n, 3, "EAG divisor eigenvalues");
      out.push_back((m - 1) * (m - 2));
      out.insert(out.end(), static_cast<std::size_t>(n - 2), m * m - 5 * m + 5);
      out.push_back(2 - m);
      break;
    case Family::CAG:
      require_points(n, 3, "CAG divisor eigenvalues");
      out.push_back(static_cast<double>(2 * binomial(n, 3)));
      out.insert(out.end(), static_cast<std::size_t>(n - 1), m * (m - 2) * (m - 4) / 3);
      break;
    case Family::Custom:
      throw InvalidArgument("custom graphs have no closed-form divisor eigenvalues");
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<double> characteristic_polynomial(const DenseMatrix<double>& b) {
  if (b.rows() != b.cols()) throw DimensionError("characteristic polynomial needs a square matrix");
  const Eigen::Index k = b.rows();
  std::vector<double> coeffs(static_cast<std::size_t>(k) + 1, 0.0);
  coeffs[k] = 1.0;
  DenseMatrix<double> m = DenseMatrix<double>::Zero(k, k);
  const DenseMatrix<double> id = DenseMatrix<double>::Identity(k, k);
  for (Eigen::Index step = 1; step <= k; ++step) {
    m = (b * m + coeffs[k - step + 1] * id).eval();
    coeffs[k - step] = -(b * m).trace() / static_cast<double>(step);
  }
  return coeffs;
}

std::vector<double> divisor_spectrum(const DenseMatrix<double>& b) {
  if (b.rows() != b.cols()) throw DimensionError("divisor_spectrum needs a square matrix");
  if (b.rows() == 0) return {};
  if (const auto w = symmetrizing_weights(b)) return symmetric_route(b, *w);
  return companion_route(b);
}

std::vector<double> divisor_spectrum(const DivisorMatrix& b) {
  if (b.entries.rows() != b.entries.cols())
    throw DimensionError("divisor_spectrum needs a square matrix");
  const DenseMatrix<double> real = b.entries.cast<double>();
  if (b.block_sizes.size() == static_cast<std::size_t>(b.k())) {
    std::vector<double> w(b.block_sizes.begin(), b.block_sizes.end());
    bool consistent = true;
    for (Eigen::Index i = 0; i < b.k() && consistent; ++i)
      for (Eigen::Index j = 0; j < b.k(); ++j)
        if (w[i] * real(i, j) != w[j] * real(j, i)) {
          consistent = false;
          break;
        }
    if (consistent) return symmetric_route(real, w);
  }
  return divisor_spectrum(real);
}

}  // namespace altgraph
