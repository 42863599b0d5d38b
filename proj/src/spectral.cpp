#include "meanlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "meanlab/errors.hpp"

namespace meanlab {

double ScalarFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::Power:
      return exponent_ == 1.0 ? x : std::pow(x, exponent_);
    case Kind::Log:
      return std::log(x);
    case Kind::Exp:
      return std::exp(x);
  }
  return x;
}

bool ScalarFunction::requires_positive() const {
  if (kind_ == Kind::Log) return true;
  if (kind_ == Kind::Exp) return false;
  return exponent_ != std::floor(exponent_);
}

HermitianMatrix apply_spectral_fn(const EigenDecomposition& e, const ScalarFunction& f) {
  RealVector v(e.values.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double x = e.values(i);
    if (f.requires_positive() && !(x > 0.0))
      throw DomainError("spectral function needs a positive spectrum (eigenvalue " +
                        std::to_string(x) + ")");
    if (f.kind() == ScalarFunction::Kind::Power && f.exponent() < 0.0 && x == 0.0)
      throw DomainError("negative power of a singular matrix");
    v(i) = f(x);
  }
  return HermitianMatrix::symmetrized(e.vectors * v.cast<Complex>().asDiagonal() *
                                      e.vectors.adjoint());
}

HermitianMatrix apply_spectral_fn(const HermitianMatrix& h, const ScalarFunction& f) {
  return apply_spectral_fn(eig_hermitian(h), f);
}

HpdMatrix apply_spectral_fn(const HpdMatrix& a, const ScalarFunction& f) {
  if (!f.maps_positive_to_positive())
    throw DomainError("log does not map HPD matrices to HPD matrices");
  if (f.kind() == ScalarFunction::Kind::Power) return a.pow(f.exponent());
  const EigenDecomposition& e = a.eig();
  RealVector v(e.values.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = f(e.values(i));
  return HpdMatrix::from_spectrum(e.vectors, v);
}

HpdMatrix exp_hermitian(const HermitianMatrix& h) {
  const EigenDecomposition e = eig_hermitian(h);
  RealVector v = e.values.array().exp().matrix();
  return HpdMatrix::from_spectrum(e.vectors, v);
}

HpdMatrix congruence(const Matrix& m, const HpdMatrix& a) {
  if (m.rows() != a.dim() || m.cols() != a.dim())
    throw PreconditionError("congruence: dimension mismatch");
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (!(s(s.size() - 1) > 1e-12 * s(0))) throw DomainError("congruence: M is singular");
  return HpdMatrix(HermitianMatrix::symmetrized(m * a.matrix() * m.adjoint()));
}

double operator_norm(const HermitianMatrix& h) {
  const RealVector v = eigenvalues_hermitian(h);
  return std::max(std::abs(v(0)), std::abs(v(v.size() - 1)));
}

double log_det(const HpdMatrix& a) { return a.eig().values.array().log().sum(); }

double trace(const HermitianMatrix& h) { return h.matrix().diagonal().real().sum(); }

double relative_gap(const HermitianMatrix& a, const HermitianMatrix& b) {
  return operator_norm(a - b) / std::max(1.0, operator_norm(b));
}

}  // namespace meanlab
