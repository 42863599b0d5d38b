#include "meanlab/multi_means.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "meanlab/spectral.hpp"

namespace meanlab {
namespace {

void require_matching(const WeightVector& w, const MatrixTuple& a) {
  if (w.size() != a.size())
    throw PreconditionError("weight vector has " + std::to_string(w.size()) +
                            " entries but the tuple has " + std::to_string(a.size()));
}

Matrix weighted_sum(const WeightVector& w, const std::vector<HermitianMatrix>& terms) {
  Matrix sum = Matrix::Zero(terms.front().dim(), terms.front().dim());
  for (int j = 0; j < w.size(); ++j) sum += w[j] * terms[j].matrix();
  return sum;
}

HermitianMatrix sandwich(const HpdMatrix& outer, const HermitianMatrix& inner) {
  return HermitianMatrix::symmetrized(outer.matrix() * inner.matrix() * outer.matrix());
}

// ||X - Y||_op / max(1, ||X||_op).
double fixed_point_gap(const HpdMatrix& x, const HpdMatrix& y) {
  return operator_norm(x.hermitian() - y.hermitian()) / std::max(1.0, x.max_eigenvalue());
}

std::string describe_failure(const char* solver, const SolverTrace& trace) {
  std::ostringstream os;
  os.precision(3);
  os << solver << ": no convergence after " << trace.iterations << " iterations (last residual "
     << (trace.residual_history.empty() ? 0.0 : trace.residual_history.back()) << ")";
  return os.str();
}

}  // namespace

WeightVector::WeightVector(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw PreconditionError("weight vector must be non-empty");
  double total = 0.0;
  for (double x : w_) {
    if (!(x > 0.0) || !std::isfinite(x))
      throw PreconditionError("weights must be positive and finite");
    total += x;
  }
  for (double& x : w_) x /= total;
}

WeightVector WeightVector::uniform(int n) { return WeightVector(std::vector<double>(n, 1.0)); }

WeightVector WeightVector::permuted(std::span<const int> sigma) const {
  std::vector<double> out;
  out.reserve(sigma.size());
  for (int j : sigma) out.push_back(w_.at(j));
  return WeightVector(std::move(out));
}

WeightVector WeightVector::repeated(int k) const {
  std::vector<double> out;
  for (int b = 0; b < k; ++b)
    for (double x : w_) out.push_back(x / k);
  return WeightVector(std::move(out));
}

MatrixTuple::MatrixTuple(std::vector<HpdMatrix> items) : items_(std::move(items)) {
  if (items_.empty()) throw PreconditionError("matrix tuple must be non-empty");
  for (const auto& x : items_)
    if (x.dim() != items_.front().dim())
      throw PreconditionError("matrix tuple has mixed dimensions");
}

MatrixTuple MatrixTuple::powered(double p) const {
  std::vector<HpdMatrix> out;
  out.reserve(items_.size());
  for (const auto& x : items_) out.push_back(x.pow(p));
  return MatrixTuple(std::move(out));
}

MatrixTuple MatrixTuple::scaled(double c) const {
  std::vector<HpdMatrix> out;
  for (const auto& x : items_) out.push_back(x.scaled(c));
  return MatrixTuple(std::move(out));
}

MatrixTuple MatrixTuple::congruent(const Matrix& s) const {
  std::vector<HpdMatrix> out;
  for (const auto& x : items_) out.push_back(congruence(s, x));
  return MatrixTuple(std::move(out));
}

MatrixTuple MatrixTuple::permuted(std::span<const int> sigma) const {
  std::vector<HpdMatrix> out;
  for (int j : sigma) out.push_back(items_.at(j));
  return MatrixTuple(std::move(out));
}

MatrixTuple MatrixTuple::repeated(int k) const {
  std::vector<HpdMatrix> out;
  for (int b = 0; b < k; ++b) out.insert(out.end(), items_.begin(), items_.end());
  return MatrixTuple(std::move(out));
}

bool quasi_routes_to_log_euclidean(double p) {
  return p != 0.0 && std::abs(p) < kQuasiLogEuclideanCutoff;
}

HpdMatrix quasi_arithmetic(double p, const WeightVector& w, const MatrixTuple& a) {
  require_matching(w, a);
  if (p == 0.0)
    throw DomainError("quasi_arithmetic: p = 0 is the log-Euclidean mean, use log_euclidean");
  if (!(std::abs(p) <= 64.0)) throw PreconditionError("quasi_arithmetic: |p| must be <= 64");
  if (quasi_routes_to_log_euclidean(p)) return log_euclidean(w, a);
  std::vector<HermitianMatrix> terms;
  terms.reserve(a.size());
  for (const auto& x : a) terms.push_back(x.pow(p).hermitian());
  const HpdMatrix inner(HermitianMatrix::symmetrized(weighted_sum(w, terms)));
  return inner.pow(1.0 / p);
}

HpdMatrix log_euclidean(const WeightVector& w, const MatrixTuple& a) {
  require_matching(w, a);
  std::vector<HermitianMatrix> logs;
  logs.reserve(a.size());
  for (const auto& x : a) logs.push_back(x.log());
  return exp_hermitian(HermitianMatrix::symmetrized(weighted_sum(w, logs)));
}

HpdMatrix arithmetic_mean(const WeightVector& w, const MatrixTuple& a) {
  return quasi_arithmetic(1.0, w, a);
}

HpdMatrix harmonic_mean(const WeightVector& w, const MatrixTuple& a) {
  return quasi_arithmetic(-1.0, w, a);
}

namespace {

HpdMatrix renyi_step(double t, double z, const WeightVector& w,
                     const std::vector<HpdMatrix>& outer, const HpdMatrix& x) {
  const HpdMatrix xp = x.pow(t / z);
  std::vector<HermitianMatrix> terms;
  terms.reserve(outer.size());
  for (const auto& o : outer) terms.push_back(HpdMatrix(sandwich(o, xp)).pow(z).hermitian());
  return HpdMatrix(HermitianMatrix::symmetrized(weighted_sum(w, terms)));
}

std::vector<HpdMatrix> renyi_outer(double t, double z, const MatrixTuple& a) {
  std::vector<HpdMatrix> outer;
  outer.reserve(a.size());
  for (const auto& x : a) outer.push_back(x.pow((1.0 - t) / (2.0 * z)));
  return outer;
}

void require_renyi_parameters(double t, double z) {
  if (!(0.0 <= t && t < z && z <= 1.0))
    throw PreconditionError("renyi_power_mean requires 0 <= t < z <= 1");
}

}  // namespace

HpdMatrix renyi_map(double t, double z, const WeightVector& w, const MatrixTuple& a,
                    const HpdMatrix& x) {
  require_matching(w, a);
  require_renyi_parameters(t, z);
  return renyi_step(t, z, w, renyi_outer(t, z, a), x);
}

SolveResult renyi_power_mean(double t, double z, const WeightVector& w, const MatrixTuple& a,
                             const SolverConfig& cfg) {
  require_matching(w, a);
  require_renyi_parameters(t, z);
  const auto outer = renyi_outer(t, z, a);
  SolverTrace trace;
  HpdMatrix x = arithmetic_mean(w, a);
  for (int k = 0; k < cfg.max_iter; ++k) {
    HpdMatrix fx = renyi_step(t, z, w, outer, x);
    const double r = fixed_point_gap(x, fx);
    trace.residual_history.push_back(r);
    trace.iterations = k;
    if (r <= cfg.residual_tol) {
      trace.converged = true;
      return {std::move(x), std::move(trace)};
    }
    x = std::move(fx);
  }
  trace.iterations = cfg.max_iter;
  throw SolverFailure(describe_failure("renyi_power_mean", trace), trace);
}

namespace {

// S(X) = sum w_j log(X^{-1/2} A_j X^{-1/2}); the Karcher equation is S = 0.
HermitianMatrix karcher_direction(const WeightVector& w, const MatrixTuple& a,
                                  const HpdMatrix& x) {
  const HpdMatrix inv_root = x.inv_sqrt();
  std::vector<HermitianMatrix> logs;
  logs.reserve(a.size());
  for (const auto& aj : a) logs.push_back(HpdMatrix(sandwich(inv_root, aj)).log());
  return HermitianMatrix::symmetrized(weighted_sum(w, logs));
}

}  // namespace

double karcher_residual(const WeightVector& w, const MatrixTuple& a, const HpdMatrix& x) {
  require_matching(w, a);
  const HpdMatrix root = x.sqrt();
  std::vector<HermitianMatrix> logs;
  for (const auto& aj : a) logs.push_back(HpdMatrix(sandwich(root, aj.inverse())).log());
  return operator_norm(HermitianMatrix::symmetrized(weighted_sum(w, logs)));
}

SolveResult karcher_mean(const WeightVector& w, const MatrixTuple& a, const SolverConfig& cfg) {
  require_matching(w, a);
  SolverTrace trace;
  HpdMatrix x = log_euclidean(w, a);
  HermitianMatrix s = karcher_direction(w, a, x);
  double r = operator_norm(s);
  for (int k = 0; k < cfg.max_iter; ++k) {
    trace.residual_history.push_back(r);
    trace.iterations = k;
    if (r <= cfg.residual_tol) {
      trace.converged = true;
      return {std::move(x), std::move(trace)};
    }
    const HpdMatrix root = x.sqrt();
    double alpha = 1.0;
    for (int halving = 0;; ++halving) {
      HpdMatrix candidate(sandwich(root, exp_hermitian(alpha * s)));
      HermitianMatrix cs = karcher_direction(w, a, candidate);
      const double cr = operator_norm(cs);
      if (cr <= r || halving == 30) {
        x = std::move(candidate);
        s = std::move(cs);
        r = cr;
        break;
      }
      alpha *= 0.5;
    }
  }
  trace.residual_history.push_back(r);
  trace.iterations = cfg.max_iter;
  if (r <= cfg.residual_tol) {
    trace.converged = true;
    return {std::move(x), std::move(trace)};
  }
  throw SolverFailure(describe_failure("karcher_mean", trace), trace);
}

HpdMatrix barycenter_map(const WeightVector& w, const MatrixTuple& a, const HpdMatrix& x) {
  require_matching(w, a);
  const HpdMatrix root = x.sqrt();
  std::vector<HermitianMatrix> roots;
  roots.reserve(a.size());
  for (const auto& aj : a) roots.push_back(HpdMatrix(sandwich(root, aj)).sqrt().hermitian());
  const Matrix m = weighted_sum(w, roots);
  const HpdMatrix inv_root = x.inv_sqrt();
  return HpdMatrix(HermitianMatrix::symmetrized(inv_root.matrix() * m * m * inv_root.matrix()));
}

SolveResult wasserstein_barycenter(const WeightVector& w, const MatrixTuple& a,
                                   const SolverConfig& cfg) {
  require_matching(w, a);
  SolverTrace trace;
  HpdMatrix x = arithmetic_mean(w, a);
  for (int k = 0; k < cfg.max_iter; ++k) {
    HpdMatrix tx = barycenter_map(w, a, x);
    const double r = fixed_point_gap(x, tx);
    trace.residual_history.push_back(r);
    trace.iterations = k;
    if (r <= cfg.residual_tol) {
      trace.converged = true;
      return {std::move(x), std::move(trace)};
    }
    x = std::move(tx);
  }
  trace.iterations = cfg.max_iter;
  throw SolverFailure(describe_failure("wasserstein_barycenter", trace), trace);
}

HpdMatrix MultiMean::operator()(const WeightVector& w, const MatrixTuple& a) const {
  switch (kind) {
    case Kind::Arithmetic:
      return arithmetic_mean(w, a);
    case Kind::Harmonic:
      return harmonic_mean(w, a);
    case Kind::Quasi:
      return quasi_arithmetic(p, w, a);
    case Kind::LogEuclidean:
      return log_euclidean(w, a);
    case Kind::Karcher:
      return karcher_mean(w, a, solver).value;
    case Kind::Barycenter:
      return wasserstein_barycenter(w, a, solver).value;
    case Kind::Renyi:
      return renyi_power_mean(t, z, w, a, solver).value;
  }
  throw PreconditionError("unknown mean kind");
}

std::string MultiMean::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Arithmetic:
      return "arithmetic";
    case Kind::Harmonic:
      return "harmonic";
    case Kind::Quasi:
      os << "quasi(p=" << p << ")";
      return os.str();
    case Kind::LogEuclidean:
      return "log-euclidean";
    case Kind::Karcher:
      return "karcher";
    case Kind::Barycenter:
      return "wasserstein-barycenter";
    case Kind::Renyi:
      os << "renyi(t=" << t << ",z=" << z << ")";
      return os.str();
  }
  return "unknown";
}

}  // namespace meanlab
