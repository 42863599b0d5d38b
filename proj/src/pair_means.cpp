#include "meanlab/pair_means.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "meanlab/errors.hpp"
#include "meanlab/spectral.hpp"

namespace meanlab {
namespace {

void require_same_dim(const HpdMatrix& a, const HpdMatrix& b) {
  if (a.dim() != b.dim())
    throw PreconditionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
}

HermitianMatrix sandwich(const HpdMatrix& outer, const HermitianMatrix& inner) {
  return HermitianMatrix::symmetrized(outer.matrix() * inner.matrix() * outer.matrix());
}

double max_abs_log(const RealVector& values) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i)
    best = std::max(best, std::abs(std::log(values(i))));
  return best;
}

}  // namespace

HermitianMatrix weighted_arithmetic(const HpdMatrix& a, const HpdMatrix& b, double t) {
  require_same_dim(a, b);
  return (1.0 - t) * a.hermitian() + t * b.hermitian();
}

HpdMatrix metric_geometric(const HpdMatrix& a, const HpdMatrix& b, double t) {
  require_same_dim(a, b);
  if (t == 0.0) return a;
  const HpdMatrix root = a.sqrt();
  const HpdMatrix inv_root = a.inv_sqrt();
  const HpdMatrix inner(sandwich(inv_root, b));
  return HpdMatrix(sandwich(root, inner.pow(t)));
}

HpdMatrix inverse_geometric(const HpdMatrix& a, const HpdMatrix& b) {
  require_same_dim(a, b);
  const HpdMatrix root = a.sqrt();
  const HpdMatrix inv_root = a.inv_sqrt();
  const HpdMatrix inner(sandwich(root, b));
  return HpdMatrix(sandwich(inv_root, inner.sqrt()));
}

HpdMatrix spectral_geometric(const HpdMatrix& a, const HpdMatrix& b, double t) {
  require_same_dim(a, b);
  if (t == 0.0) return a;
  const HpdMatrix ct = inverse_geometric(a, b).pow(t);
  return HpdMatrix(sandwich(ct, a));
}

HpdMatrix wasserstein_mean(const HpdMatrix& a, const HpdMatrix& b, double t) {
  require_same_dim(a, b);
  if (t == 0.0) return a;
  const HpdMatrix c = inverse_geometric(a, b);
  // I nabla_t C shares C's eigenvectors: (1 - t) + t lambda_i.
  RealVector factor = ((1.0 - t) + t * c.eig().values.array()).matrix();
  if (!(factor.minCoeff() > 1e-12))
    throw DomainError("wasserstein_mean: I nabla_t (A^{-1} # B) is not positive definite at t = " +
                      std::to_string(t));
  const HpdMatrix k = HpdMatrix::from_spectrum(c.eig().vectors, factor);
  return HpdMatrix(sandwich(k, a));
}

HermitianMatrix wasserstein_mean_polynomial(const HpdMatrix& a, const HpdMatrix& b, double t) {
  require_same_dim(a, b);
  const Matrix& am = a.matrix();
  const HpdMatrix c = inverse_geometric(a, b);
  const Matrix& cm = c.matrix();
  const Matrix sum = (1.0 - t) * (1.0 - t) * am + t * t * b.matrix() +
                     t * (1.0 - t) * (am * cm + cm * am);
  return HermitianMatrix::symmetrized(sum);
}

HpdMatrix fidelity(const HpdMatrix& a, const HpdMatrix& b) {
  require_same_dim(a, b);
  return HpdMatrix(sandwich(a.sqrt(), b)).sqrt();
}

double thompson_distance(const HpdMatrix& a, const HpdMatrix& b) {
  require_same_dim(a, b);
  const HpdMatrix inner(sandwich(a.inv_sqrt(), b));
  return max_abs_log(inner.eig().values);
}

double bures_wasserstein_distance(const HpdMatrix& a, const HpdMatrix& b) {
  require_same_dim(a, b);
  const double sq = trace(a) + trace(b) - 2.0 * fidelity(a, b).eig().values.sum();
  if (sq < -1e-12)
    throw NumericalFailure("bures_wasserstein_distance: negative squared distance " +
                           std::to_string(sq));
  return std::sqrt(std::max(sq, 0.0));
}

double spectral_semimetric(const HpdMatrix& a, const HpdMatrix& b) {
  return 2.0 * max_abs_log(inverse_geometric(a, b).eig().values);
}

}  // namespace meanlab
