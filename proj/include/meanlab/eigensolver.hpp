#pragma once

#include "meanlab/hermitian.hpp"

namespace meanlab {

/// Cyclic complex Jacobi. Sweeps until the off-diagonal Frobenius norm is
/// at most 1e-14 ||H||_F; throws NumericalFailure after 30 sweeps.
/// Deterministic for identical input.
EigenDecomposition eig_hermitian(const HermitianMatrix& h);

/// Same iteration without accumulating eigenvectors.
RealVector eigenvalues_hermitian(const HermitianMatrix& h);

}  // namespace meanlab
