#include "meanlab/samplers.hpp"

#include <cmath>
#include <string>

#include "meanlab/errors.hpp"
#include "meanlab/spectral.hpp"

namespace meanlab {

void SamplerSpec::validate() const {
  if (dim < 1 || dim > 16) throw PreconditionError("sampler dim must be in [1, 16]");
  if (!(lambda_lo > 0.0 && lambda_lo <= lambda_hi) || !std::isfinite(lambda_hi))
    throw PreconditionError("sampler spectrum range must satisfy 0 < lo <= hi");
  if (count < 1) throw PreconditionError("sampler count must be >= 1");
}

Matrix random_unitary(Rng& rng, int dim) {
  Matrix z(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i)
      z(i, j) = Complex(rng.normal(), rng.normal()) * std::sqrt(0.5);
  // Gram-Schmidt with one re-orthogonalization pass; R has a positive
  // diagonal, so Q is Haar distributed.
  for (int j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < j; ++k) z.col(j) -= z.col(k).dot(z.col(j)) * z.col(k);
    z.col(j) /= z.col(j).norm();
  }
  return z;
}

namespace {

RealVector log_uniform_spectrum(Rng& rng, int dim, double lo, double hi) {
  RealVector v(dim);
  const double span = std::log(hi / lo);
  for (int i = 0; i < dim; ++i) v(i) = lo * std::exp(span * rng.uniform());
  return v;
}

HpdMatrix from_unitary(const Matrix& u, const RealVector& lambda) {
  // Re-validate through the eigensolver rather than trusting (U, lambda).
  return HpdMatrix(HermitianMatrix::symmetrized(u * lambda.cast<Complex>().asDiagonal() *
                                                u.adjoint()));
}

}  // namespace

HpdMatrix random_hpd(Rng& rng, int dim, double lo, double hi) {
  const Matrix u = random_unitary(rng, dim);
  return from_unitary(u, log_uniform_spectrum(rng, dim, lo, hi));
}

HermitianMatrix random_psd(Rng& rng, int dim, double norm) {
  const int rank = rng.uniform_int(1, dim);
  Matrix g(dim, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < dim; ++i) g(i, j) = Complex(rng.normal(), rng.normal());
  HermitianMatrix p = HermitianMatrix::symmetrized(g * g.adjoint());
  const double current = operator_norm(p);
  return (current > 0.0 ? norm / current : 0.0) * p;
}

HermitianMatrix random_hermitian(Rng& rng, int dim, double norm) {
  Matrix g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) g(i, j) = Complex(rng.normal(), rng.normal());
  HermitianMatrix h = HermitianMatrix::symmetrized(g + g.adjoint());
  const double current = operator_norm(h);
  return (current > 0.0 ? norm / current : 0.0) * h;
}

Matrix random_invertible(Rng& rng, int dim, double cond_root) {
  const Matrix u = random_unitary(rng, dim);
  const Matrix v = random_unitary(rng, dim);
  RealVector sigma = log_uniform_spectrum(rng, dim, 1.0 / cond_root, cond_root);
  return u * sigma.cast<Complex>().asDiagonal() * v.adjoint();
}

WeightVector random_weights(Rng& rng, int n) {
  std::vector<double> w(n);
  for (double& x : w) x = rng.uniform(0.05, 1.0);
  return WeightVector(std::move(w));
}

HpdMatrix random_hpd(const SamplerSpec& spec) {
  spec.validate();
  Rng rng(spec.seed, "random_hpd");
  return random_hpd(rng, spec.dim, spec.lambda_lo, spec.lambda_hi);
}

MatrixTuple random_tuple(const SamplerSpec& spec) {
  spec.validate();
  Rng rng(spec.seed, "random_tuple");
  std::vector<HpdMatrix> items;
  for (int j = 0; j < spec.count; ++j)
    items.push_back(random_hpd(rng, spec.dim, spec.lambda_lo, spec.lambda_hi));
  return MatrixTuple(std::move(items));
}

NearOrderedPair random_near_ordered_pair(const SamplerSpec& spec) {
  spec.validate();
  Rng rng(spec.seed, "random_near_ordered_pair");
  HpdMatrix a = random_hpd(rng, spec.dim, spec.lambda_lo, spec.lambda_hi);
  const double reach = spec.lambda_hi > 1.0 ? spec.lambda_hi - 1.0 : 1.0;
  const HermitianMatrix p = random_psd(rng, spec.dim, reach * rng.uniform());
  HpdMatrix c(HermitianMatrix::identity(spec.dim) + p);
  HpdMatrix b(HermitianMatrix::symmetrized(c.matrix() * a.matrix() * c.matrix()));
  return {std::move(a), std::move(b), std::move(c)};
}

SampledPair random_loewner_pair(const SamplerSpec& spec) {
  spec.validate();
  Rng rng(spec.seed, "random_loewner_pair");
  HpdMatrix a = random_hpd(rng, spec.dim, spec.lambda_lo, spec.lambda_hi);
  const HermitianMatrix p = random_psd(rng, spec.dim, spec.lambda_hi * rng.uniform());
  HpdMatrix b(a.hermitian() + p);
  return {std::move(a), std::move(b)};
}

SampledPair random_chaotic_pair(const SamplerSpec& spec) {
  spec.validate();
  Rng rng(spec.seed, "random_chaotic_pair");
  HpdMatrix a = random_hpd(rng, spec.dim, spec.lambda_lo, spec.lambda_hi);
  const double span = spec.lambda_hi > spec.lambda_lo ? std::log(spec.lambda_hi / spec.lambda_lo)
                                                      : 1.0;
  const HermitianMatrix p = random_psd(rng, spec.dim, span * rng.uniform());
  HpdMatrix b = exp_hermitian(a.log() + p);
  return {std::move(a), std::move(b)};
}

MatrixTuple random_commuting_family(const SamplerSpec& spec, int n) {
  spec.validate();
  if (n < 1) throw PreconditionError("commuting family needs n >= 1");
  Rng rng(spec.seed, "random_commuting_family");
  const Matrix u = random_unitary(rng, spec.dim);
  std::vector<HpdMatrix> items;
  for (int j = 0; j < n; ++j)
    items.push_back(from_unitary(u, log_uniform_spectrum(rng, spec.dim, spec.lambda_lo,
                                                         spec.lambda_hi)));
  return MatrixTuple(std::move(items));
}

}  // namespace meanlab
