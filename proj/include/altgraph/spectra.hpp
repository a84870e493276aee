// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "altgraph/cayley.hpp"
#include "altgraph/graph.hpp"

namespace altgraph {

enum class SolverKind { Dense, Iterative };
std::string to_string(SolverKind s);

inline constexpr std::size_t kDefaultDenseMaxOrder = 3000;
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr long kDefaultMaxIterations = 200000;

/// Eigenvalue summary of an adjacency matrix.
///
/// Dense mode fills `eigenvalues` with the whole spectrum (descending, with
/// repetition) and groups it into `distinct`/`multiplicities`: consecutive
/// values closer than `cluster_threshold` form one cluster. Iterative mode
/// only knows lambda1 (the degree) and lambda2.
struct SpectrumReport {
  Family family = Family::Custom;
  int n = 0;
  std::size_t order = 0;
  std::size_t degree = 0;
  SolverKind solver = SolverKind::Dense;
  double tolerance = 0;
  std::uint64_t seed = 0;
  std::vector<double> eigenvalues;
  std::vector<double> distinct;
  std::vector<int> multiplicities;
  double cluster_threshold = 0;
  double lambda1 = 0;
  double lambda2 = 0;
  double gap = 0;
  // Equals gap for regular graphs.
  double algebraic_connectivity = 0;
  double residual = 0;
  long iterations = 0;
  bool connected = true;
  // Dense mode with eigenvectors requested: column k pairs with eigenvalues[k].
  Eigen::MatrixXd eigenvectors;
};

struct DenseOptions {
  std::size_t max_order = kDefaultDenseMaxOrder;
  bool eigenvectors = false;
};

Eigen::MatrixXd adjacency_matrix(const Graph& g);
/// y = A x on the compressed adjacency.
Eigen::VectorXd adjacency_apply(const Graph& g, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Whole spectrum by cyclic Jacobi. Throws CapExceeded above max_order.
SpectrumReport dense_spectrum(const Graph& g, double tol, const DenseOptions& options = {});
SpectrumReport dense_spectrum(const CayleyGraph& g, double tol, const DenseOptions& options = {});

struct IterativeOptions {
  std::uint64_t seed = kDefaultSeed;
  long max_iterations = kDefaultMaxIterations;
};

struct IterativeResult {
  double lambda2 = 0;
  double residual = 0;
  long iterations = 0;
  std::uint64_t seed = 0;
  // False means lambda2 == degree is the expected outcome, not an error.
  bool connected = true;
};

/// Second-largest adjacency eigenvalue of a regular graph by power
/// iteration on A + d I restricted to the complement of the all-ones
/// vector. Throws ConvergenceError (carrying the last residual) when the
/// iteration cap is hit.
IterativeResult lambda2_iterative(const Graph& g, double tol, const IterativeOptions& options = {});

/// Report with solver = Iterative: lambda1 = degree, lambda2 from the
/// iterative solver.
SpectrumReport iterative_spectrum(const CayleyGraph& g, double tol,
                                  const IterativeOptions& options = {});

/// degree - lambda2_iterative(g).
double spectral_gap(const Graph& g, double tol, const IterativeOptions& options = {});

/// Closed-form lambda1, lambda2 and gap of a family graph.
struct Predicted {
  long long lambda1 = 0;
  long long lambda2 = 0;
  long long gap = 0;
};
Predicted predicted(Family family, int n);

struct Integrality {
  bool integral = true;
  double worst_offset = 0;
};
Integrality integrality_check(const SpectrumReport& report, double tol);

/// f^T A f / f^T f. Throws InvalidArgument for a zero or mis-sized vector.
double rayleigh(const Graph& g, const Eigen::Ref<const Eigen::VectorXd>& f);

}  // namespace altgraph
