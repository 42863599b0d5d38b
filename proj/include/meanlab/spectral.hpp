#pragma once

#include "meanlab/eigensolver.hpp"
#include "meanlab/hermitian.hpp"

namespace meanlab {

/// One of the scalar maps lifted to matrices through the spectrum.
class ScalarFunction {
 public:
  enum class Kind { Power, Log, Exp };

  static ScalarFunction power(double p) { return {Kind::Power, p}; }
  static ScalarFunction log() { return {Kind::Log, 0.0}; }
  static ScalarFunction exp() { return {Kind::Exp, 0.0}; }

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }

  double operator()(double x) const;
  /// Log and non-integer powers need a positive spectrum; negative integer
  /// powers need a non-zero one.
  bool requires_positive() const;
  bool maps_positive_to_positive() const { return kind_ != Kind::Log; }

 private:
  ScalarFunction(Kind k, double p) : kind_(k), exponent_(p) {}
  Kind kind_;
  double exponent_;
};

/// V diag(f(lambda)) V*. Throws DomainError when f is not defined on the
/// spectrum.
HermitianMatrix apply_spectral_fn(const HermitianMatrix& h, const ScalarFunction& f);
HermitianMatrix apply_spectral_fn(const EigenDecomposition& e, const ScalarFunction& f);

/// HPD-to-HPD variant, reusing the cached decomposition. Throws DomainError
/// for log.
HpdMatrix apply_spectral_fn(const HpdMatrix& a, const ScalarFunction& f);

/// exp(H), always positive definite.
HpdMatrix exp_hermitian(const HermitianMatrix& h);

/// M A M*. Throws DomainError if sigma_min(M) <= 1e-12 sigma_max(M).
HpdMatrix congruence(const Matrix& m, const HpdMatrix& a);

/// max_i |lambda_i(H)|.
double operator_norm(const HermitianMatrix& h);
inline double operator_norm(const HpdMatrix& a) { return a.max_eigenvalue(); }

/// sum_i log lambda_i(A).
double log_det(const HpdMatrix& a);

double trace(const HermitianMatrix& h);

/// ||A - B||_op / max(1, ||B||_op): the relative gap used by solvers and tests.
double relative_gap(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace meanlab
