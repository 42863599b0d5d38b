#include "meanlab/order_relations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "meanlab/eigensolver.hpp"
#include "meanlab/pair_means.hpp"
#include "meanlab/spectral.hpp"

namespace meanlab {
namespace {

void require_same_dim(const HpdMatrix& a, const HpdMatrix& b) {
  if (a.dim() != b.dim()) throw PreconditionError("order relation: dimension mismatch");
}

std::string fmt(const char* label, double v) {
  std::ostringstream os;
  os.precision(17);
  os << label << " = " << v;
  return os.str();
}

// Descending view of an ascending spectrum.
double desc(const RealVector& ascending, int i) {
  return ascending(ascending.size() - 1 - i);
}

}  // namespace

double ToleranceProfile::effective(const HpdMatrix& a, const HpdMatrix& b) const {
  if (!rel_scale) return psd_margin;
  return psd_margin * std::max({1.0, a.max_eigenvalue(), b.max_eigenvalue()});
}

OrderVerdict OrderVerdict::make(double margin, double tolerance, std::string witness, int index) {
  return OrderVerdict{margin >= -tolerance, margin, tolerance, std::move(witness), index};
}

OrderVerdict loewner_cmp(const HpdMatrix& a, const HpdMatrix& b, const ToleranceProfile& tol) {
  require_same_dim(a, b);
  const double m = eigenvalues_hermitian(b.hermitian() - a.hermitian())(0);
  return OrderVerdict::make(m, tol.effective(a, b), fmt("lambda_min(B - A)", m), 0);
}

OrderVerdict chaotic_cmp(const HpdMatrix& a, const HpdMatrix& b, const ToleranceProfile& tol) {
  require_same_dim(a, b);
  const double m = eigenvalues_hermitian(b.log() - a.log())(0);
  return OrderVerdict::make(m, tol.effective(a, b), fmt("lambda_min(log B - log A)", m), 0);
}

OrderVerdict near_order_cmp(const HpdMatrix& a, const HpdMatrix& b, const ToleranceProfile& tol) {
  require_same_dim(a, b);
  const double eps = tol.effective(a, b);
  const double primary = inverse_geometric(a, b).min_eigenvalue() - 1.0;
  const double dual = 1.0 - metric_geometric(a, b.inverse(), 0.5).max_eigenvalue();
  if ((primary < -eps && dual > eps) || (primary > eps && dual < -eps)) {
    std::ostringstream os;
    os.precision(17);
    os << "near_order_cmp: criteria disagree, lambda_min(A^-1 # B) - 1 = " << primary
       << " but 1 - lambda_max(A # B^-1) = " << dual;
    throw NumericalFailure(os.str());
  }
  return OrderVerdict::make(primary, eps, fmt("lambda_min(A^-1 # B) - 1", primary), 0);
}

OrderVerdict eigen_entrywise_cmp(const HpdMatrix& a, const HpdMatrix& b,
                                 const ToleranceProfile& tol) {
  require_same_dim(a, b);
  const RealVector& la = a.eig().values;
  const RealVector& lb = b.eig().values;
  double best = desc(lb, 0) - desc(la, 0);
  int at = 0;
  for (int i = 1; i < a.dim(); ++i) {
    const double d = desc(lb, i) - desc(la, i);
    if (d < best) best = d, at = i;
  }
  return OrderVerdict::make(best, tol.effective(a, b),
                            fmt("min_i lambda_i(B) - lambda_i(A)", best), at);
}

OrderVerdict spectra_equal(const HpdMatrix& a, const HpdMatrix& b, const ToleranceProfile& tol) {
  require_same_dim(a, b);
  const RealVector diff = (a.eig().values - b.eig().values).cwiseAbs();
  Eigen::Index at = 0;
  const double worst = diff.maxCoeff(&at);
  return OrderVerdict::make(-worst, tol.effective(a, b),
                            fmt("max_i |lambda_i(A) - lambda_i(B)|", worst),
                            a.dim() - 1 - static_cast<int>(at));
}

OrderVerdict weak_log_majorization_cmp(const HpdMatrix& a, const HpdMatrix& b,
                                       const ToleranceProfile& tol, bool strong) {
  require_same_dim(a, b);
  const RealVector& la = a.eig().values;
  const RealVector& lb = b.eig().values;
  double sa = 0.0, sb = 0.0;
  double best = 0.0;
  int at = 0;
  for (int k = 0; k < a.dim(); ++k) {
    sa += std::log(desc(la, k));
    sb += std::log(desc(lb, k));
    const double d = sb - sa;
    if (k == 0 || d < best) best = d, at = k;
  }
  std::string witness = fmt("min_k partial log-sum gap", best);
  if (strong) {
    const double total = -std::abs(sb - sa);
    if (total < best) {
      best = total;
      at = a.dim() - 1;
      witness = fmt("-|log det B - log det A|", -total);
    }
  }
  return OrderVerdict::make(best, tol.effective(a, b), std::move(witness), at);
}

std::vector<std::string> RelationProfile::chain_violations() const {
  const std::pair<const char*, const OrderVerdict*> chain[] = {
      {"loewner", &loewner},
      {"chaotic", &chaotic},
      {"near", &near},
      {"eigen_entrywise", &eigen_entrywise},
      {"weak_log_major", &weak_log_major}};
  std::vector<std::string> out;
  for (std::size_t i = 0; i + 1 < std::size(chain); ++i)
    if (chain[i].second->holds && !chain[i + 1].second->holds)
      out.push_back(std::string(chain[i].first) + " => " + chain[i + 1].first);
  return out;
}

RelationProfile compute_relation_profile(const HpdMatrix& a, const HpdMatrix& b,
                                         const ToleranceProfile& tol) {
  return RelationProfile{loewner_cmp(a, b, tol), chaotic_cmp(a, b, tol),
                         near_order_cmp(a, b, tol), eigen_entrywise_cmp(a, b, tol),
                         weak_log_majorization_cmp(a, b, tol)};
}

RelationProfile relation_profile(const HpdMatrix& a, const HpdMatrix& b,
                                 const ToleranceProfile& tol) {
  RelationProfile p = compute_relation_profile(a, b, tol);
  const auto broken = p.chain_violations();
  if (!broken.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << "relation chain violated at " << broken.front() << "; margins: loewner "
       << p.loewner.margin << ", chaotic " << p.chaotic.margin << ", near " << p.near.margin
       << ", eigen " << p.eigen_entrywise.margin << ", wlog " << p.weak_log_major.margin
       << " (tolerance " << p.loewner.tolerance << ")";
    throw ChainViolation(os.str(), std::move(p));
  }
  return p;
}

}  // namespace meanlab
