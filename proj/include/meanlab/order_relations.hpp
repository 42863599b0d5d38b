#pragma once

#include <string>
#include <vector>

#include "meanlab/errors.hpp"
#include "meanlab/hermitian.hpp"

namespace meanlab {

/// Floating-point slack for deciding the (exact) order relations.
struct ToleranceProfile {
  double psd_margin = 1e-9;
  /// Scale psd_margin by max(1, ||A||_op, ||B||_op).
  bool rel_scale = true;

  double effective(const HpdMatrix& a, const HpdMatrix& b) const;
};

/// Signed outcome of one relation test: margin >= -tolerance means it holds.
struct OrderVerdict {
  bool holds = false;
  double margin = 0.0;
  double tolerance = 0.0;
  /// Description of the extremal quantity, e.g. "lambda_min(B - A)".
  std::string witness;
  /// Index (in the sorted spectrum or prefix) where the margin is attained.
  int index = 0;

  static OrderVerdict make(double margin, double tolerance, std::string witness, int index);
};

OrderVerdict loewner_cmp(const HpdMatrix& a, const HpdMatrix& b, const ToleranceProfile& tol);
OrderVerdict chaotic_cmp(const HpdMatrix& a, const HpdMatrix& b, const ToleranceProfile& tol);

/// A near-order B iff A^{-1} # B >= I. The margin lambda_min(A^{-1} # B) - 1
/// is cross-checked against the dual criterion A # B^{-1} <= I (computed
/// through the metric geometric mean); a sign disagreement beyond tolerance
/// throws NumericalFailure.
OrderVerdict near_order_cmp(const HpdMatrix& a, const HpdMatrix& b, const ToleranceProfile& tol);

/// Descending spectra compared index by index.
OrderVerdict eigen_entrywise_cmp(const HpdMatrix& a, const HpdMatrix& b,
                                 const ToleranceProfile& tol);

/// A =_lambda B: margin = -max_i |lambda_i(A) - lambda_i(B)|.
OrderVerdict spectra_equal(const HpdMatrix& a, const HpdMatrix& b, const ToleranceProfile& tol);

/// Weak log-majorization of A by B; with `strong` also requires equal
/// determinants (log-majorization).
OrderVerdict weak_log_majorization_cmp(const HpdMatrix& a, const HpdMatrix& b,
                                       const ToleranceProfile& tol, bool strong = false);

struct RelationProfile {
  OrderVerdict loewner;
  OrderVerdict chaotic;
  OrderVerdict near;
  OrderVerdict eigen_entrywise;
  OrderVerdict weak_log_major;

  /// Links of the implication chain loewner => chaotic => near =>
  /// eigen_entrywise => weak_log_major whose premise holds but conclusion
  /// fails. Empty when consistent.
  std::vector<std::string> chain_violations() const;
};

/// Raised by relation_profile when the implication chain is broken.
class ChainViolation : public NumericalFailure {
 public:
  ChainViolation(const std::string& what, RelationProfile profile)
      : NumericalFailure(what), profile_(std::move(profile)) {}
  const RelationProfile& profile() const { return profile_; }

 private:
  RelationProfile profile_;
};

/// All five verdicts; throws ChainViolation with the full profile when a
/// link of the chain is violated.
RelationProfile relation_profile(const HpdMatrix& a, const HpdMatrix& b,
                                 const ToleranceProfile& tol);

/// Same computation without the chain assertion.
RelationProfile compute_relation_profile(const HpdMatrix& a, const HpdMatrix& b,
                                         const ToleranceProfile& tol);

}  // namespace meanlab
