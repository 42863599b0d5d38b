#include "meanlab/hermitian.hpp"

#include <cmath>
#include <string>

#include "meanlab/eigensolver.hpp"
#include "meanlab/errors.hpp"

namespace meanlab {
namespace {

Matrix hermitian_part(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    out(j, j) = Complex(m(j, j).real(), 0.0);
    for (Eigen::Index i = j + 1; i < m.rows(); ++i) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

void check_shape(const Matrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw PreconditionError("Hermitian matrix must be square and non-empty");
  if (m.rows() > kMaxDim)
    throw PreconditionError("matrix dimension " + std::to_string(m.rows()) + " exceeds " +
                            std::to_string(kMaxDim));
}

}  // namespace

double max_abs_entry(const Matrix& m) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) best = std::max(best, std::abs(m(i, j)));
  return best;
}

HermitianMatrix::HermitianMatrix(const Matrix& entries) {
  check_shape(entries);
  if (!entries.allFinite()) throw PreconditionError("Hermitian matrix has non-finite entries");
  const double asym = max_abs_entry(entries - entries.adjoint());
  if (asym > kHermitianSlack * max_abs_entry(entries))
    throw PreconditionError("matrix is not Hermitian (max |H - H*| = " + std::to_string(asym) +
                            ")");
  m_ = hermitian_part(entries);
}

HermitianMatrix HermitianMatrix::symmetrized(const Matrix& entries) {
  check_shape(entries);
  return HermitianMatrix(Trusted{}, hermitian_part(entries));
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  return HermitianMatrix(Trusted{}, Matrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  return HermitianMatrix(Trusted{}, Matrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  const int m = static_cast<int>(values.size());
  Matrix d = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) d(i, i) = values[i];
  return HermitianMatrix(d);
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw PreconditionError("dimension mismatch in Hermitian sum");
  return HermitianMatrix(HermitianMatrix::Trusted{}, a.m_ + b.m_);
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw PreconditionError("dimension mismatch in Hermitian difference");
  return HermitianMatrix(HermitianMatrix::Trusted{}, a.m_ - b.m_);
}

HermitianMatrix operator*(double c, const HermitianMatrix& a) {
  return HermitianMatrix(HermitianMatrix::Trusted{}, c * a.m_);
}

HermitianMatrix HermitianMatrix::operator-() const { return HermitianMatrix(Trusted{}, -m_); }

Matrix EigenDecomposition::reconstruct() const {
  return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

HpdMatrix::HpdMatrix(HermitianMatrix h) : h_(std::move(h)), eig_(eig_hermitian(h_)) {
  if (!(eig_.values(0) > 0.0))
    throw DomainError("matrix is not positive definite (lambda_min = " +
                      std::to_string(eig_.values(0)) + ")");
}

HpdMatrix HpdMatrix::from_spectrum(const Matrix& vectors, const RealVector& values) {
  const Eigen::Index m = values.size();
  std::vector<Eigen::Index> order(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (!(values(i) > 0.0) || !std::isfinite(values(i)))
      throw DomainError("spectrum is not positive (" + std::to_string(values(i)) + ")");
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return values(i) < values(j); });
  EigenDecomposition e;
  e.values.resize(m);
  e.vectors.resize(m, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    e.values(k) = values(order[k]);
    e.vectors.col(k) = vectors.col(order[k]);
  }
  HermitianMatrix h = HermitianMatrix::symmetrized(e.reconstruct());
  return HpdMatrix(std::move(h), std::move(e));
}

HpdMatrix HpdMatrix::identity(int dim) {
  EigenDecomposition e{RealVector::Ones(dim), Matrix::Identity(dim, dim)};
  return HpdMatrix(HermitianMatrix::identity(dim), std::move(e));
}

HpdMatrix HpdMatrix::diagonal(std::span<const double> values) {
  return HpdMatrix(HermitianMatrix::diagonal(values));
}

HpdMatrix HpdMatrix::pow(double p) const {
  if (p == 1.0) return *this;
  RealVector v(eig_.values.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = std::pow(eig_.values(i), p);
  return from_spectrum(eig_.vectors, v);
}

HermitianMatrix HpdMatrix::log() const {
  RealVector v(eig_.values.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = std::log(eig_.values(i));
  return HermitianMatrix::symmetrized(eig_.vectors * v.cast<Complex>().asDiagonal() *
                                      eig_.vectors.adjoint());
}

HpdMatrix HpdMatrix::scaled(double c) const {
  if (!(c > 0.0)) throw DomainError("HPD scaling factor must be positive");
  EigenDecomposition e{c * eig_.values, eig_.vectors};
  return HpdMatrix(c * h_, std::move(e));
}

}  // namespace meanlab
