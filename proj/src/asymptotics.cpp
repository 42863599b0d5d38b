#include "meanlab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "meanlab/errors.hpp"
#include "meanlab/pair_means.hpp"
#include "meanlab/spectral.hpp"

namespace meanlab {
namespace {

void require_decreasing_grid(const std::vector<double>& grid, bool allow_negative) {
  if (grid.empty()) throw PreconditionError("limit study grid must be non-empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double g = allow_negative ? std::abs(grid[i]) : grid[i];
    if (!(g > 0.0 && g < 1.0))
      throw PreconditionError("limit study grid values must lie in (0, 1)");
    if (i > 0) {
      const double prev = allow_negative ? std::abs(grid[i - 1]) : grid[i - 1];
      if (!(g < prev)) throw PreconditionError("limit study grid must decrease toward 0");
    }
  }
}

void require_tuple_matches(const WeightVector& w, int n) {
  if (w.size() != n) throw PreconditionError("weights and tuple sizes differ");
}

}  // namespace

HpdMatrix Curve::at(double s) const {
  if (s == 0.0) return HpdMatrix::identity(h_.dim());
  return exp_hermitian(s * h_);
}

bool LimitStudyReport::all_verdicts_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const GridVerdict& v) { return v.verdict.holds; });
}

double LimitStudyReport::worst_margin() const {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& v : verdicts) worst = std::min(worst, v.verdict.margin);
  return worst;
}

std::optional<double> estimate_order(const std::vector<double>& grid,
                                     const std::vector<double>& errors) {
  std::vector<double> ratios;
  for (std::size_t i = 0; i + 1 < grid.size() && i + 1 < errors.size(); ++i) {
    if (!(errors[i] > 0.0) || !(errors[i + 1] > 0.0)) return std::nullopt;
    ratios.push_back(std::log(errors[i] / errors[i + 1]) /
                     std::log(std::abs(grid[i]) / std::abs(grid[i + 1])));
  }
  if (ratios.empty()) return std::nullopt;
  std::sort(ratios.begin(), ratios.end());
  const std::size_t mid = ratios.size() / 2;
  return ratios.size() % 2 ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
}

LimitStudyReport lie_trotter_limit_study(const MultiMean& mean, const WeightVector& w,
                                         const std::vector<Curve>& curves,
                                         const std::vector<double>& s_grid,
                                         const ToleranceProfile& tol) {
  if (curves.empty()) throw PreconditionError("lie_trotter_limit_study needs curves");
  require_tuple_matches(w, static_cast<int>(curves.size()));
  const int m = curves.front().generator().dim();
  for (const auto& c : curves)
    if (c.generator().dim() != m) throw PreconditionError("curves have mixed dimensions");
  require_decreasing_grid(s_grid, true);

  Matrix log_target = Matrix::Zero(m, m);
  for (int j = 0; j < w.size(); ++j) log_target += w[j] * curves[j].generator().matrix();
  const HpdMatrix target = exp_hermitian(HermitianMatrix::symmetrized(log_target));

  LimitStudyReport report;
  report.study = "lie-trotter:" + mean.name();
  report.grid = s_grid;
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    const double s = s_grid[i];
    std::vector<HpdMatrix> points;
    for (const auto& c : curves) points.push_back(c.at(s));
    const MatrixTuple tuple(std::move(points));
    const HpdMatrix g = mean(w, tuple);
    report.errors.push_back(thompson_distance(g.pow(1.0 / s), target));
    const int idx = static_cast<int>(i);
    report.verdicts.push_back({idx, "H<=G", near_order_cmp(harmonic_mean(w, tuple), g, tol)});
    report.verdicts.push_back({idx, "G<=A", near_order_cmp(g, arithmetic_mean(w, tuple), tol)});
  }
  report.estimated_order = estimate_order(report.grid, report.errors);
  return report;
}

RenyiHypothesis detect_renyi_hypothesis(const MatrixTuple& a) {
  const bool below = std::all_of(a.begin(), a.end(),
                                 [](const HpdMatrix& x) { return x.max_eigenvalue() <= 1.0; });
  if (below) return RenyiHypothesis::BelowIdentity;
  const bool above = std::all_of(a.begin(), a.end(),
                                 [](const HpdMatrix& x) { return x.min_eigenvalue() >= 1.0; });
  return above ? RenyiHypothesis::AboveIdentity : RenyiHypothesis::None;
}

LimitStudyReport renyi_zero_limit_study(double t, double z, const WeightVector& w,
                                        const MatrixTuple& a, const std::vector<double>& p_grid,
                                        RenyiHypothesis hypothesis, const ToleranceProfile& tol,
                                        const SolverConfig& solver) {
  if (!(0.0 <= t && t < z && z <= 1.0))
    throw PreconditionError("renyi_zero_limit_study requires 0 <= t < z <= 1");
  require_tuple_matches(w, a.size());
  require_decreasing_grid(p_grid, false);
  if (hypothesis != RenyiHypothesis::None) {
    const RenyiHypothesis found = detect_renyi_hypothesis(a);
    const bool ok =
        found == hypothesis ||
        (hypothesis == RenyiHypothesis::AboveIdentity &&
         std::all_of(a.begin(), a.end(), [](const HpdMatrix& x) { return x.min_eigenvalue() >= 1.0; }));
    if (!ok) throw PreconditionError("tuple does not satisfy the requested spectral hypothesis");
  }

  const MatrixTuple shifted = a.powered(1.0 - t);
  const HpdMatrix le_bound = log_euclidean(w, shifted);

  LimitStudyReport report;
  report.study = "renyi-zero";
  report.grid = p_grid;
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    const double p = p_grid[i];
    const int idx = static_cast<int>(i);
    const HpdMatrix plus = renyi_power_mean(t, z, w, a.powered(p), solver).value.pow(1.0 / p);
    const HpdMatrix minus = renyi_power_mean(t, z, w, a.powered(-p), solver).value.pow(-1.0 / p);
    report.errors.push_back(thompson_distance(plus, minus));
    report.verdicts.push_back({idx, "R(A^-p)^(-1/p)<=R(A^p)^(1/p)", near_order_cmp(minus, plus, tol)});
    if (hypothesis == RenyiHypothesis::BelowIdentity) {
      report.verdicts.push_back(
          {idx, "R(A^p)^(1/p)<=Q_p(A^(1-t))", near_order_cmp(plus, quasi_arithmetic(p, w, shifted), tol)});
      report.diagnostics.push_back({idx, "R(A^p)^(1/p)<=LE(A^(1-t))", near_order_cmp(plus, le_bound, tol)});
    } else if (hypothesis == RenyiHypothesis::AboveIdentity) {
      report.verdicts.push_back(
          {idx, "Q_-p(A^(1-t))<=R(A^-p)^(-1/p)", near_order_cmp(quasi_arithmetic(-p, w, shifted), minus, tol)});
      report.diagnostics.push_back({idx, "LE(A^(1-t))<=R(A^-p)^(-1/p)", near_order_cmp(le_bound, minus, tol)});
    }
  }
  report.estimated_order = estimate_order(report.grid, report.errors);
  return report;
}

LimitStudyReport qp_le_convergence_study(const WeightVector& w, const MatrixTuple& a,
                                         const std::vector<double>& p_grid,
                                         const ToleranceProfile& tol) {
  require_tuple_matches(w, a.size());
  require_decreasing_grid(p_grid, false);
  const HpdMatrix le = log_euclidean(w, a);
  LimitStudyReport report;
  report.study = "qp-le";
  report.grid = p_grid;
  std::vector<HpdMatrix> pos, neg;
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    const int idx = static_cast<int>(i);
    pos.push_back(quasi_arithmetic(p_grid[i], w, a));
    neg.push_back(quasi_arithmetic(-p_grid[i], w, a));
    report.errors.push_back(thompson_distance(pos.back(), le));
    report.verdicts.push_back({idx, "LE<=Q_p", near_order_cmp(le, pos.back(), tol)});
    report.verdicts.push_back({idx, "Q_-p<=LE", near_order_cmp(neg.back(), le, tol)});
    if (i > 0) {
      report.verdicts.push_back({idx, "Q_p<=Q_prev", near_order_cmp(pos[i], pos[i - 1], tol)});
      report.verdicts.push_back({idx, "Q_-prev<=Q_-p", near_order_cmp(neg[i - 1], neg[i], tol)});
    }
  }
  report.estimated_order = estimate_order(report.grid, report.errors);
  return report;
}

}  // namespace meanlab
