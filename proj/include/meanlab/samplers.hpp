#pragma once

#include <cstdint>

#include "meanlab/hermitian.hpp"
#include "meanlab/multi_means.hpp"
#include "meanlab/rng.hpp"

namespace meanlab {

/// Everything a sampler draw depends on. Every sampler is a pure function
/// of its spec: equal specs give bit-identical matrices.
struct SamplerSpec {
  std::uint64_t seed = 0;
  int dim = 2;
  double lambda_lo = 0.2;
  double lambda_hi = 5.0;
  /// Tuple size for random_tuple.
  int count = 1;

  /// Throws PreconditionError unless 1 <= dim <= 16, 0 < lo <= hi, count >= 1.
  void validate() const;
};

struct SampledPair {
  HpdMatrix a;
  HpdMatrix b;
};

/// B = C A C with C = I + P, P >= 0; by Riccati uniqueness A^{-1} # B = C.
struct NearOrderedPair {
  HpdMatrix a;
  HpdMatrix b;
  HpdMatrix factor;
};

/// U diag(lambda) U*, lambda log-uniform in [lo, hi], U Haar from the QR of
/// a complex Gaussian matrix.
HpdMatrix random_hpd(const SamplerSpec& spec);

/// count independent random_hpd draws.
MatrixTuple random_tuple(const SamplerSpec& spec);

NearOrderedPair random_near_ordered_pair(const SamplerSpec& spec);

/// B = A + P with P >= 0, ||P|| uniform in [0, lambda_hi].
SampledPair random_loewner_pair(const SamplerSpec& spec);

/// log B = log A + P with P >= 0, ||P|| uniform in [0, log(hi / lo)]
/// (or [0, 1] for a degenerate range).
SampledPair random_chaotic_pair(const SamplerSpec& spec);

/// n matrices U diag(lambda_j) U* sharing one unitary U.
MatrixTuple random_commuting_family(const SamplerSpec& spec, int n);

// Building blocks on an explicit stream.
Matrix random_unitary(Rng& rng, int dim);
HpdMatrix random_hpd(Rng& rng, int dim, double lo, double hi);
/// Rank drawn uniformly in [1, dim]; scaled so that ||P||_op = norm.
HermitianMatrix random_psd(Rng& rng, int dim, double norm);
/// Hermitian with ||H||_op = norm.
HermitianMatrix random_hermitian(Rng& rng, int dim, double norm);
/// U diag(sigma) V* with sigma log-uniform in [1/cond_root, cond_root].
Matrix random_invertible(Rng& rng, int dim, double cond_root = 2.0);
/// Positive weights drawn uniformly from [0.05, 1], normalized.
WeightVector random_weights(Rng& rng, int n);

}  // namespace meanlab
