#pragma once

#include "meanlab/hermitian.hpp"

namespace meanlab {

// Two-variable means and distances on HPD matrices. Parameters t may be any
// finite real unless stated otherwise; all functions require equal dims.

/// (1 - t) A + t B. Positive definite only guaranteed for t in [0, 1].
HermitianMatrix weighted_arithmetic(const HpdMatrix& a, const HpdMatrix& b, double t);

/// A #_t B = A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}.
HpdMatrix metric_geometric(const HpdMatrix& a, const HpdMatrix& b, double t);

/// A^{-1} # B through the closed form A^{-1/2} (A^{1/2} B A^{1/2})^{1/2} A^{-1/2}.
/// This is the canonical path used by the spectral and Wasserstein means and
/// by the near-order test.
HpdMatrix inverse_geometric(const HpdMatrix& a, const HpdMatrix& b);

/// A natural_t B = (A^{-1} # B)^t A (A^{-1} # B)^t.
HpdMatrix spectral_geometric(const HpdMatrix& a, const HpdMatrix& b, double t);

/// A diamond_t B = [I nabla_t (A^{-1} # B)] A [I nabla_t (A^{-1} # B)].
/// Throws DomainError when lambda_min(I nabla_t (A^{-1} # B)) <= 1e-12,
/// which can only happen for t outside [0, 1].
HpdMatrix wasserstein_mean(const HpdMatrix& a, const HpdMatrix& b, double t);

/// (1-t)^2 A + t^2 B + t(1-t) [A C + C A], C = A^{-1} # B. Second route
/// to the Wasserstein mean, kept for cross-validation.
HermitianMatrix wasserstein_mean_polynomial(const HpdMatrix& a, const HpdMatrix& b, double t);

/// F(A, B) = (A^{1/2} B A^{1/2})^{1/2}.
HpdMatrix fidelity(const HpdMatrix& a, const HpdMatrix& b);

/// d_T(A, B) = ||log A^{-1/2} B A^{-1/2}||.
double thompson_distance(const HpdMatrix& a, const HpdMatrix& b);

/// [tr(A + B) - 2 tr F(A, B)]^{1/2}. Values of the bracket in [-1e-12, 0)
/// are clamped to 0; anything lower throws NumericalFailure.
double bures_wasserstein_distance(const HpdMatrix& a, const HpdMatrix& b);

/// 2 ||log(A^{-1} # B)||.
double spectral_semimetric(const HpdMatrix& a, const HpdMatrix& b);

}  // namespace meanlab
