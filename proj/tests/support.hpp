#pragma once

#include <cmath>
#include <initializer_list>
#include <vector>

#include <Eigen/Eigenvalues>

#include "meanlab/hermitian.hpp"
#include "meanlab/multi_means.hpp"
#include "meanlab/rng.hpp"
#include "meanlab/samplers.hpp"

namespace meanlab::test {

inline HpdMatrix diag(std::initializer_list<double> v) {
  const std::vector<double> values(v);
  return HpdMatrix::diagonal(values);
}

inline HermitianMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const int m = static_cast<int>(rows.size());
  Matrix out(m, m);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (double x : r) out(i, j++) = x;
    ++i;
  }
  return HermitianMatrix(out);
}

inline double op_norm(const Matrix& m) {
  // Largest singular value through Eigen's SVD, independent of the Jacobi code.
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

/// Relative operator-norm distance ||x - y|| / max(1, ||y||).
inline double rel_dist(const Matrix& x, const Matrix& y) {
  return op_norm(x - y) / std::max(1.0, op_norm(y));
}

/// Reference eigenvalues from Eigen's Householder-QR solver.
inline Eigen::VectorXd reference_eigenvalues(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// Reference spectral function built from Eigen's solver.
template <class F>
Matrix reference_fn(const Matrix& h, F f) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Eigen::VectorXd v = es.eigenvalues();
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = f(v(i));
  return es.eigenvectors() * v.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

inline double reference_min_eig(const Matrix& h) { return reference_eigenvalues(h)(0); }

inline MatrixTuple tuple_of(std::initializer_list<HpdMatrix> items) {
  return MatrixTuple(std::vector<HpdMatrix>(items));
}

inline MatrixTuple random_tuple_rng(Rng& rng, int n, int dim, double lo = 0.2, double hi = 5.0) {
  std::vector<HpdMatrix> items;
  for (int j = 0; j < n; ++j) items.push_back(random_hpd(rng, dim, lo, hi));
  return MatrixTuple(std::move(items));
}

}  // namespace meanlab::test
