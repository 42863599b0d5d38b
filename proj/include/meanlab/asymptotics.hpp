#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meanlab/hermitian.hpp"
#include "meanlab/multi_means.hpp"
#include "meanlab/order_relations.hpp"

namespace meanlab {

/// gamma(s) = exp(s H): gamma(0) = I, gamma'(0) = H.
class Curve {
 public:
  explicit Curve(HermitianMatrix generator) : h_(std::move(generator)) {}
  const HermitianMatrix& generator() const { return h_; }
  HpdMatrix at(double s) const;

 private:
  HermitianMatrix h_;
};

/// One labelled relation check at one grid point.
struct GridVerdict {
  int grid_index = 0;
  std::string check;
  OrderVerdict verdict;
};

struct LimitStudyReport {
  std::string study;
  /// s-grid or p-grid, strictly decreasing toward 0.
  std::vector<double> grid;
  /// Thompson-distance error per grid point.
  std::vector<double> errors;
  /// Median of log(E_i / E_{i+1}) / log(g_i / g_{i+1}); empty if undefined
  /// (some E is zero).
  std::optional<double> estimated_order;
  std::vector<GridVerdict> verdicts;
  /// Checks recorded as data only, never counted as theorem failures.
  std::vector<GridVerdict> diagnostics;

  bool all_verdicts_hold() const;
  double worst_margin() const;
};

/// Median of the dyadic log-ratios of errors along a decreasing grid.
std::optional<double> estimate_order(const std::vector<double>& grid,
                                     const std::vector<double>& errors);

/// E(s) = d_T(G(w; gamma_1(s), ..., gamma_n(s))^{1/s}, exp(sum w_j H_j)).
/// Each grid point also records the sandwich H <= G <= A in the near order.
LimitStudyReport lie_trotter_limit_study(const MultiMean& mean, const WeightVector& w,
                                         const std::vector<Curve>& curves,
                                         const std::vector<double>& s_grid,
                                         const ToleranceProfile& tol = {});

enum class RenyiHypothesis {
  None,
  /// all A_j <= I
  BelowIdentity,
  /// all A_j >= I
  AboveIdentity,
};

/// For each p: P+ = R(A^p)^{1/p} and P- = R(A^{-p})^{-1/p}. Verdicts:
/// P- near-order P+ at every p; with BelowIdentity also
/// P+ near-order Q_p(A^{1-t}); with AboveIdentity also
/// Q_{-p}(A^{1-t}) near-order P-. The limit bound against LE(A^{1-t}) is
/// recorded as a diagnostic at each p. errors[i] = d_T(P+, P-).
LimitStudyReport renyi_zero_limit_study(double t, double z, const WeightVector& w,
                                        const MatrixTuple& a, const std::vector<double>& p_grid,
                                        RenyiHypothesis hypothesis,
                                        const ToleranceProfile& tol = {},
                                        const SolverConfig& solver = {});

/// Hypothesis that holds for the tuple (BelowIdentity checked first), or None.
RenyiHypothesis detect_renyi_hypothesis(const MatrixTuple& a);

/// For each p: LE near-order Q_p and Q_{-p} near-order LE, and for adjacent
/// grid points p < q: Q_p near-order Q_q and Q_{-q} near-order Q_{-p}.
/// errors[i] = d_T(Q_p, LE).
LimitStudyReport qp_le_convergence_study(const WeightVector& w, const MatrixTuple& a,
                                         const std::vector<double>& p_grid,
                                         const ToleranceProfile& tol = {});

}  // namespace meanlab
