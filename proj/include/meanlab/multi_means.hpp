#pragma once

#include <span>
#include <string>
#include <vector>

#include "meanlab/errors.hpp"
#include "meanlab/hermitian.hpp"

namespace meanlab {

/// Positive probability vector; normalized to sum 1 at construction.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);
  static WeightVector uniform(int n);

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](int j) const { return w_[j]; }
  std::span<const double> values() const { return w_; }

  /// (w_sigma(1), ..., w_sigma(n)).
  WeightVector permuted(std::span<const int> sigma) const;
  /// k copies of w, each scaled by 1/k.
  WeightVector repeated(int k) const;

 private:
  std::vector<double> w_;
};

/// Non-empty tuple of HPD matrices of one dimension.
class MatrixTuple {
 public:
  explicit MatrixTuple(std::vector<HpdMatrix> items);

  int size() const { return static_cast<int>(items_.size()); }
  int dim() const { return items_.front().dim(); }
  const HpdMatrix& operator[](int j) const { return items_[j]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  MatrixTuple powered(double p) const;
  MatrixTuple inverted() const { return powered(-1.0); }
  MatrixTuple scaled(double c) const;
  /// (S A_1 S*, ..., S A_n S*).
  MatrixTuple congruent(const Matrix& s) const;
  MatrixTuple permuted(std::span<const int> sigma) const;
  MatrixTuple repeated(int k) const;

 private:
  std::vector<HpdMatrix> items_;
};

struct SolverConfig {
  /// Residual bound in scaled operator norm.
  double residual_tol = 1e-12;
  int max_iter = 500;
};

struct SolverTrace {
  int iterations = 0;
  std::vector<double> residual_history;
  bool converged = false;
};

struct SolveResult {
  HpdMatrix value;
  SolverTrace trace;
};

/// Non-convergence of a fixed-point solver; carries the trace.
class SolverFailure : public NumericalFailure {
 public:
  SolverFailure(const std::string& what, SolverTrace trace)
      : NumericalFailure(what), trace_(std::move(trace)) {}
  const SolverTrace& trace() const { return trace_; }

 private:
  SolverTrace trace_;
};

/// Below this |p| the quasi-arithmetic mean is replaced by the log-Euclidean
/// mean (its p -> 0 limit), since (.)^{1/p} amplifies rounding by 1/p.
inline constexpr double kQuasiLogEuclideanCutoff = 1e-4;

/// True when quasi_arithmetic(p, ...) is evaluated as log_euclidean.
bool quasi_routes_to_log_euclidean(double p);

/// Q_p = (sum w_j A_j^p)^{1/p}. p == 0 throws DomainError; |p| > 64 throws
/// PreconditionError.
HpdMatrix quasi_arithmetic(double p, const WeightVector& w, const MatrixTuple& a);

/// LE = exp(sum w_j log A_j).
HpdMatrix log_euclidean(const WeightVector& w, const MatrixTuple& a);

HpdMatrix arithmetic_mean(const WeightVector& w, const MatrixTuple& a);
HpdMatrix harmonic_mean(const WeightVector& w, const MatrixTuple& a);

/// One application of X -> sum w_j (A_j^{(1-t)/(2z)} X^{t/z} A_j^{(1-t)/(2z)})^z.
HpdMatrix renyi_map(double t, double z, const WeightVector& w, const MatrixTuple& a,
                    const HpdMatrix& x);

/// Renyi power mean R_{t,z}: Picard iteration of renyi_map from the
/// arithmetic mean. Requires 0 <= t < z <= 1.
SolveResult renyi_power_mean(double t, double z, const WeightVector& w, const MatrixTuple& a,
                             const SolverConfig& cfg = {});

/// ||sum w_j log(X^{1/2} A_j^{-1} X^{1/2})||_op.
double karcher_residual(const WeightVector& w, const MatrixTuple& a, const HpdMatrix& x);

/// Karcher mean: X <- X^{1/2} exp(alpha S) X^{1/2},
/// S = sum w_j log(X^{-1/2} A_j X^{-1/2}), alpha halved while the residual
/// would increase. Starts from the log-Euclidean mean.
SolveResult karcher_mean(const WeightVector& w, const MatrixTuple& a, const SolverConfig& cfg = {});

/// X^{-1/2} (sum w_j (X^{1/2} A_j X^{1/2})^{1/2})^2 X^{-1/2}.
HpdMatrix barycenter_map(const WeightVector& w, const MatrixTuple& a, const HpdMatrix& x);

/// Bures-Wasserstein barycenter by fixed-point iteration of barycenter_map
/// from the arithmetic mean.
SolveResult wasserstein_barycenter(const WeightVector& w, const MatrixTuple& a,
                                   const SolverConfig& cfg = {});

/// A named multi-variable mean with its parameters, as selected from the
/// command line or by the Lie-Trotter study.
struct MultiMean {
  enum class Kind { Arithmetic, Harmonic, Quasi, LogEuclidean, Karcher, Barycenter, Renyi };
  Kind kind = Kind::Arithmetic;
  double p = 1.0;
  double t = 0.0;
  double z = 1.0;
  SolverConfig solver{};

  HpdMatrix operator()(const WeightVector& w, const MatrixTuple& a) const;
  std::string name() const;
};

}  // namespace meanlab
