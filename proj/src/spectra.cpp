// SPDX-License-Identifier: Apache-2.0
#include "altgraph/spectra.hpp"

#include <cmath>
#include <random>

#include "altgraph/dense.hpp"
#include "altgraph/error.hpp"

namespace altgraph {

namespace {

std::size_t regular_degree_or_throw(const Graph& g, const char* what) {
  const auto d = g.regular_degree();
  if (!d) throw InvalidArgument(std::string(what) + " needs a regular graph");
  return *d;
}

void cluster(SpectrumReport& r) {
  r.distinct.clear();
  r.multiplicities.clear();
  double sum = 0;
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
    const double x = r.eigenvalues[k];
    if (k == 0 || r.eigenvalues[k - 1] - x > r.cluster_threshold) {
      if (k > 0) r.distinct.back() = sum / r.multiplicities.back();
      r.distinct.push_back(x);
      r.multiplicities.push_back(0);
      sum = 0;
    }
    sum += x;
    ++r.multiplicities.back();
  }
  if (!r.distinct.empty()) r.distinct.back() = sum / r.multiplicities.back();
}

// Uniform in [-1, 1) from raw generator bits, independent of the standard
// library's distribution implementations.
double uniform_symmetric(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

}  // namespace

std::string to_string(SolverKind s) { return s == SolverKind::Dense ? "dense" : "iterative"; }

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) a(u, v) = 1.0;
  return a;
}

Eigen::VectorXd adjacency_apply(const Graph& g, const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (static_cast<std::size_t>(x.size()) != g.order())
    throw DimensionError("vector length does not match the graph order");
  Eigen::VectorXd y(x.size());
  for (Vertex u = 0; u < g.order(); ++u) {
    double s = 0;
    for (Vertex v : g.neighbors(u)) s += x[v];
    y[u] = s;
  }
  return y;
}

SpectrumReport dense_spectrum(const Graph& g, double tol, const DenseOptions& options) {
  if (g.order() > options.max_order)
    throw CapExceeded("order " + std::to_string(g.order()) + " above the dense cap " +
                      std::to_string(options.max_order) + "; use the iterative solver");
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  SpectrumReport r;
  r.order = g.order();
  r.degree = g.max_degree();
  r.solver = SolverKind::Dense;
  r.tolerance = tol;
  r.cluster_threshold = 100 * tol;
  r.connected = is_connected(g);
  if (g.order() == 0) return r;

  const Eigen::MatrixXd a = adjacency_matrix(g);
  const auto eig = jacobi_eigen(a, tol, options.eigenvectors);
  r.eigenvalues.assign(eig.values.data(), eig.values.data() + eig.values.size());
  if (options.eigenvectors) {
    r.eigenvectors = eig.vectors;
    r.residual = (a * eig.vectors - eig.vectors * eig.values.asDiagonal()).colwise().norm().maxCoeff();
  } else {
    r.residual = eig.off_norm;
  }
  r.iterations = eig.sweeps;
  cluster(r);
  r.lambda1 = r.eigenvalues.front();
  r.lambda2 = r.eigenvalues.size() > 1 ? r.eigenvalues[1] : r.lambda1;
  r.gap = r.lambda1 - r.lambda2;
  r.algebraic_connectivity = r.gap;
  return r;
}

SpectrumReport dense_spectrum(const CayleyGraph& g, double tol, const DenseOptions& options) {
  SpectrumReport r = dense_spectrum(static_cast<const Graph&>(g), tol, options);
  r.family = g.family();
  r.n = g.n();
  r.degree = g.cayley_degree();
  return r;
}

IterativeResult lambda2_iterative(const Graph& g, double tol, const IterativeOptions& options) {
  const std::size_t d = regular_degree_or_throw(g, "lambda2_iterative");
  if (g.order() < 2) throw InvalidArgument("lambda2_iterative needs order >= 2");
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");

  IterativeResult result;
  result.seed = options.seed;
  result.connected = is_connected(g);

  const auto n = static_cast<Eigen::Index>(g.order());
  const double shift = static_cast<double>(d);
  std::mt19937_64 rng(options.seed);
  Eigen::VectorXd x(n);
  for (Eigen::Index k = 0; k < n; ++k) x[k] = uniform_symmetric(rng);
  x.array() -= x.mean();
  x.normalize();

  double previous = std::numeric_limits<double>::infinity();
  double residual = std::numeric_limits<double>::infinity();
  for (long it = 1; it <= options.max_iterations; ++it) {
    Eigen::VectorXd y = adjacency_apply(g, x) + shift * x;
    y.array() -= y.mean();
    const double rq = x.dot(y);
    residual = (y - rq * x).norm();
    result.iterations = it;
    const double norm = y.norm();
    if (norm == 0.0) {
      // The shifted operator vanishes on the complement of the ones vector.
      result.lambda2 = -shift;
      result.residual = 0;
      return result;
    }
    if (std::abs(rq - previous) < tol / 10 && residual < tol) {
      result.lambda2 = rq - shift;
      result.residual = residual;
      return result;
    }
    previous = rq;
    x = y / norm;
  }
  throw ConvergenceError("lambda2_iterative hit the iteration cap of " +
                             std::to_string(options.max_iterations) + " (last residual " +
                             std::to_string(residual) + ")",
                         residual);
}

SpectrumReport iterative_spectrum(const CayleyGraph& g, double tol, const IterativeOptions& options) {
  const IterativeResult it = lambda2_iterative(g, tol, options);
  SpectrumReport r;
  r.family = g.family();
  r.n = g.n();
  r.order = g.order();
  r.degree = g.cayley_degree();
  r.solver = SolverKind::Iterative;
  r.tolerance = tol;
  r.seed = it.seed;
  r.lambda1 = static_cast<double>(r.degree);
  r.lambda2 = it.lambda2;
  r.eigenvalues = {r.lambda1, r.lambda2};
  r.gap = r.lambda1 - r.lambda2;
  r.algebraic_connectivity = r.gap;
  r.residual = it.residual;
  r.iterations = it.iterations;
  r.connected = it.connected;
  return r;
}

double spectral_gap(const Graph& g, double tol, const IterativeOptions& options) {
  const std::size_t d = regular_degree_or_throw(g, "spectral_gap");
  return static_cast<double>(d) - lambda2_iterative(g, tol, options).lambda2;
}

Predicted predicted(Family family, int n) {
  const long long m = n;
  Predicted p;
  switch (family) {
    case Family::AG:
      if (n < 3) throw InvalidArgument("AG needs n >= 3");
      if (n == 3) return {2, -1, 3};
      p.lambda1 = 2 * m - 4;
      p.lambda2 = 2 * m - 6;
      break;
    case Family::EAG:
      if (n < 3) throw InvalidArgument("EAG needs n >= 3");
      p.lambda1 = (m - 1) * (m - 2);
      p.lambda2 = m * m - 5 * m + 5;
      break;
    case Family::CAG:
      if (n < 3) throw InvalidArgument("CAG needs n >= 3");
      p.lambda1 = m * (m - 1) * (m - 2) / 3;
      p.lambda2 = m * (m - 2) * (m - 4) / 3;
      break;
    case Family::Custom:
      throw InvalidArgument("custom graphs have no closed-form spectrum");
  }
  p.gap = p.lambda1 - p.lambda2;
  return p;
}

Integrality integrality_check(const SpectrumReport& report, double tol) {
  Integrality out;
  for (double x : report.eigenvalues) out.worst_offset = std::max(out.worst_offset, std::abs(x - std::round(x)));
  out.integral = out.worst_offset <= tol;
  return out;
}

double rayleigh(const Graph& g, const Eigen::Ref<const Eigen::VectorXd>& f) {
  if (static_cast<std::size_t>(f.size()) != g.order())
    throw DimensionError("vector length does not match the graph order");
  const double denom = f.squaredNorm();
  if (denom == 0.0) throw InvalidArgument("rayleigh quotient of the zero vector");
  return f.dot(adjacency_apply(g, f)) / denom;
}

}  // namespace altgraph
