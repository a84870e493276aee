// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Jacobi>

#include "altgraph/error.hpp"

namespace altgraph {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<long long>;

template <typename Scalar>
struct SymmetricEigen {
  DenseVector<Scalar> values;   // descending
  DenseMatrix<Scalar> vectors;  // column k pairs with values[k]; empty unless requested
  int sweeps = 0;
  Scalar off_norm = 0;          // off-diagonal Frobenius norm at exit
};

/// Cyclic Jacobi eigensolver for a real symmetric matrix. Sweeps until the
/// off-diagonal Frobenius norm drops below tol * ||A||_F.
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& input,
                                                      typename Derived::Scalar tol,
                                                      bool want_vectors = true,
                                                      int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw DimensionError("jacobi_eigen needs a square matrix");
  const Eigen::Index n = input.rows();
  DenseMatrix<Scalar> a = input;
  if (n > 0 && (a - a.transpose()).cwiseAbs().maxCoeff() >
                   Scalar(1e-12) * (Scalar(1) + a.cwiseAbs().maxCoeff()))
    throw InvalidArgument("jacobi_eigen needs a symmetric matrix");

  SymmetricEigen<Scalar> out;
  DenseMatrix<Scalar> v;
  if (want_vectors) v = DenseMatrix<Scalar>::Identity(n, n);

  const Scalar frobenius = a.norm();
  auto off_diagonal = [&] {
    Scalar sum(0);
    for (Eigen::Index q = 0; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) sum += a(p, q) * a(p, q) + a(q, p) * a(q, p);
    return std::sqrt(sum);
  };
  Scalar off = off_diagonal();
  while (off > tol * frobenius) {
    if (out.sweeps == max_sweeps)
      throw ConvergenceError("Jacobi sweeps exhausted", static_cast<double>(off));
    ++out.sweeps;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = Scalar(0);
        if (want_vectors) v.applyOnTheRight(p, q, rot);
      }
    }
    off = off_diagonal();
  }
  out.off_norm = off;

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x) > a(y, y); });
  out.values.resize(n);
  if (want_vectors) out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    if (want_vectors) out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

}  // namespace altgraph
