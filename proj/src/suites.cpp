#include "meanlab/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

#include "meanlab/asymptotics.hpp"
#include "meanlab/errors.hpp"
#include "meanlab/pair_means.hpp"
#include "meanlab/rng.hpp"
#include "meanlab/samplers.hpp"
#include "meanlab/spectral.hpp"
#include "suite_detail.hpp"

namespace meanlab {

void SuiteOptions::validate() const {
  if (trials < 1) throw PreconditionError("trials must be >= 1");
  if (dim_lo < 1 || dim_hi < dim_lo || dim_hi > 16)
    throw PreconditionError("dims must satisfy 1 <= lo <= hi <= 16");
  if (!(tol.psd_margin > 0.0)) throw PreconditionError("tolerance must be > 0");
  if (!(solver.residual_tol > 0.0)) throw PreconditionError("solver tolerance must be > 0");
  if (solver.max_iter < 1) throw PreconditionError("solver max_iter must be >= 1");
}

namespace detail {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Trial::Trial(const SuiteInfo& info, Rng rng, int dim, int index, const SuiteOptions& options)
    : info_(info), rng_(std::move(rng)), dim_(dim), index_(index), options_(options) {
  outcome_.props.resize(info.properties.size() + info.diagnostics.size());
}

PropState& Trial::state(std::string_view prop) {
  for (std::size_t k = 0; k < info_.properties.size(); ++k)
    if (info_.properties[k] == prop) return outcome_.props[k];
  for (std::size_t k = 0; k < info_.diagnostics.size(); ++k)
    if (info_.diagnostics[k] == prop) return outcome_.props[info_.properties.size() + k];
  throw std::logic_error("suite " + info_.name + " has no property " + std::string(prop));
}

void Trial::check(std::string_view prop, bool ok, double margin, const std::string& witness) {
  PropState& s = state(prop);
  ++s.checks;
  if (!ok && !s.failed) {
    s.failed = true;
    s.failure = witness + " (margin " + fmt(margin) + ")";
  }
  if (!s.has_margin || margin < s.margin) {
    s.has_margin = true;
    s.margin = margin;
  }
}

void Trial::verdict(std::string_view prop, const OrderVerdict& v, const std::string& label) {
  check(prop, v.holds, v.margin, label + ": " + v.witness + ", tolerance " + fmt(v.tolerance));
}

void Trial::bound(std::string_view prop, double value, double limit, const std::string& label) {
  check(prop, value <= limit, limit - value, label + " = " + fmt(value) + " vs bound " + fmt(limit));
}

void Trial::vacuous(std::string_view prop) { ++state(prop).checks; }

void Trial::skip(std::string_view prop) { state(prop).skipped = true; }

void Trial::count(const std::string& name, double v) { outcome_.counters[name] += v; }

}  // namespace detail

namespace {

using detail::fmt;
using detail::Trial;
using detail::TrialOutcome;

constexpr double kDefaultLo = 0.2;
constexpr double kDefaultHi = 5.0;

HpdMatrix hpd(Trial& c, double lo = kDefaultLo, double hi = kDefaultHi) {
  return random_hpd(c.rng(), c.dim(), lo, hi);
}

MatrixTuple tuple(Trial& c, int n, double lo = kDefaultLo, double hi = kDefaultHi) {
  std::vector<HpdMatrix> items;
  for (int j = 0; j < n; ++j) items.push_back(hpd(c, lo, hi));
  return MatrixTuple(std::move(items));
}

SamplerSpec spec_for(Trial& c) {
  SamplerSpec s;
  s.seed = c.rng().next_u64();
  s.dim = c.dim();
  return s;
}

double rel_err(const HermitianMatrix& x, const HermitianMatrix& ref) {
  const double scale = operator_norm(ref);
  return operator_norm(x - ref) / (scale > 0.0 ? scale : 1.0);
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(sigma[i], sigma[rng.uniform_int(0, i)]);
  return sigma;
}

OrderVerdict near(const HpdMatrix& a, const HpdMatrix& b, Trial& c) {
  return near_order_cmp(a, b, c.tol());
}

struct Decision {
  std::string label;
  double margin;
  double tolerance;
  bool holds() const { return margin >= -tolerance; }
};

Decision decision(std::string label, const OrderVerdict& v) {
  return {std::move(label), v.margin, v.tolerance};
}

/// All decisions must agree; the margin is the distance of the closest one
/// to its threshold, negated on disagreement.
void check_agreement(Trial& c, std::string_view prop, const std::vector<Decision>& ds) {
  bool all = true, none = true;
  double dist = std::numeric_limits<double>::infinity();
  std::string bits;
  for (const auto& d : ds) {
    all = all && d.holds();
    none = none && !d.holds();
    dist = std::min(dist, std::abs(d.margin + d.tolerance));
    bits += d.label + "=" + (d.holds() ? "1" : "0") + "(" + fmt(d.margin) + ") ";
  }
  const bool agree = all || none;
  c.check(prop, agree, agree ? dist : -dist, bits);
}

std::string param(const char* name, double v) { return std::string(name) + "=" + fmt(v); }

// ---------------------------------------------------------------------------

void trial_thompson_lemma(Trial& c) {
  const HpdMatrix a = hpd(c), b = hpd(c), cc = hpd(c), d = hpd(c);
  const double dab = thompson_distance(a, b);
  const double scale = std::max(1.0, dab);

  c.bound("inverse-invariance", std::abs(thompson_distance(a.inverse(), b.inverse()) - dab),
          1e-9 * scale, "|d(A^-1,B^-1) - d(A,B)|");
  const Matrix m = random_invertible(c.rng(), c.dim());
  c.bound("congruence-invariance",
          std::abs(thompson_distance(congruence(m, a), congruence(m, b)) - dab), 1e-9 * scale,
          "|d(MAM*,MBM*) - d(A,B)|");
  c.bound("symmetry", std::abs(thompson_distance(b, a) - dab), 1e-10 * scale, "|d(B,A) - d(A,B)|");

  const double dac = thompson_distance(a, cc), dbd = thompson_distance(b, d);
  const double dcd = thompson_distance(cc, d);
  const HpdMatrix ab(a.hermitian() + b.hermitian()), cd(cc.hermitian() + d.hermitian());
  c.bound("sum-contraction", thompson_distance(ab, cd), std::max(dac, dbd) + 1e-10,
          "d(A+B,C+D)");

  const double t = c.rng().uniform();
  c.bound("power-contraction", thompson_distance(a.pow(t), b.pow(t)), t * dab + 1e-10,
          "d(A^t,B^t) " + param("t", t));

  const double s = c.rng().uniform(), u = c.rng().uniform();
  const double lhs = thompson_distance(metric_geometric(a, b, s), metric_geometric(cc, d, u));
  const std::string su = param("s", s) + " " + param("t", u);
  c.bound("geodesic-convexity", lhs, (1 - s) * dac + s * dbd + std::abs(s - u) * dcd + 1e-9,
          "d(A#_sB, C#_tD) " + su);
  c.bound("geodesic-convexity-as-printed", lhs,
          (1 - u) * dac + u * dbd + std::abs(s - u) * dcd + 1e-9, "d(A#_sB, C#_tD) " + su);

  const double tt = c.rng().uniform(-0.5, 1.5);
  c.bound("metric-mean-congruence",
          rel_err(congruence(m, metric_geometric(a, b, tt)),
                  metric_geometric(congruence(m, a), congruence(m, b), tt)),
          1e-9, "M(A#_tB)M* vs (MAM*)#_t(MBM*) " + param("t", tt));

  const HpdMatrix g = metric_geometric(a, b, 0.5);
  const HermitianMatrix riccati =
      HermitianMatrix::symmetrized(g.matrix() * a.inverse().matrix() * g.matrix());
  c.bound("riccati-residual", rel_err(riccati, b), 1e-9, "||X A^-1 X - B|| / ||B||");

  const MatrixTuple fam = random_commuting_family(spec_for(c), 2);
  const double tc = c.rng().uniform(-0.5, 1.5);
  const HermitianMatrix collapse =
      HermitianMatrix::symmetrized(fam[0].pow(1 - tc).matrix() * fam[1].pow(tc).matrix());
  c.bound("commuting-collapse",
          std::max(rel_err(metric_geometric(fam[0], fam[1], tc), collapse),
                   rel_err(spectral_geometric(fam[0], fam[1], tc), collapse)),
          1e-10, "commuting #_t, natural_t vs A^(1-t)B^t " + param("t", tc));

  c.bound("endpoint-exactness",
          std::max({rel_err(spectral_geometric(a, b, 0), a), rel_err(spectral_geometric(a, b, 1), b),
                    rel_err(wasserstein_mean(a, b, 0), a), rel_err(wasserstein_mean(a, b, 1), b)}),
          1e-11, "natural_t, diamond_t at t in {0,1}");

  const double tw = c.rng().uniform();
  const HpdMatrix x = wasserstein_mean(a, b, tw);
  const HpdMatrix xi = x.inverse();
  const HermitianMatrix fp =
      HermitianMatrix::identity(c.dim()) -
      ((1 - tw) * metric_geometric(a, xi, 0.5).hermitian() + tw * metric_geometric(b, xi, 0.5).hermitian());
  c.bound("wasserstein-fixed-point", operator_norm(fp), 1e-9,
          "||I - (1-t)(A#X^-1) - t(B#X^-1)|| " + param("t", tw));
  c.bound("wasserstein-polynomial-form", rel_err(wasserstein_mean_polynomial(a, b, tw), x), 1e-10,
          "congruence vs polynomial form " + param("t", tw));

  const double gs = c.rng().uniform(-0.5, 1.5), gt = c.rng().uniform(-0.5, 1.5);
  const double geo = spectral_semimetric(spectral_geometric(a, b, gs), spectral_geometric(a, b, gt));
  const double geo_bound = std::abs(gs - gt) * spectral_semimetric(a, b);
  c.bound("spectral-geodesic", geo, geo_bound + 1e-9 * std::max(1.0, geo_bound),
          "d(A natural_s B, A natural_t B) " + param("s", gs) + " " + param("t", gt));

  const double dw = bures_wasserstein_distance(a, b);
  c.bound("bures-symmetry", std::abs(bures_wasserstein_distance(b, a) - dw),
          1e-10 * std::max(1.0, dw), "|d_W(B,A) - d_W(A,B)|");
  const double tf = trace(fidelity(a, b));
  c.bound("fidelity-trace-symmetry", std::abs(trace(fidelity(b, a)) - tf), 1e-9 * std::abs(tf),
          "|tr F(B,A) - tr F(A,B)|");
}

void trial_equivalence(Trial& c) {
  HpdMatrix a = HpdMatrix::identity(c.dim()), b = a;
  const int kind = c.index() % 4;
  if (kind < 2) {
    NearOrderedPair p = random_near_ordered_pair(spec_for(c));
    a = kind == 0 ? p.a : p.b;
    b = kind == 0 ? p.b : p.a;
  } else {
    a = hpd(c);
    b = hpd(c);
  }
  const double eff = c.tol().effective(a, b);
  const HpdMatrix sg = spectral_geometric(a, b, 0.5);
  const HpdMatrix wm = wasserstein_mean(a, b, 0.5);
  const std::vector<Decision> items = {
      decision("(1)", near(a, b, c)),
      {"(2)", metric_geometric(a.inverse(), b, 0.5).min_eigenvalue() - 1.0, eff},
      {"(3)", 1.0 - metric_geometric(a, b.inverse(), 0.5).max_eigenvalue(), eff},
      decision("(4)", near(a, sg, c)),
      decision("(5)", near(sg, b, c)),
      decision("(6)", near(a, wm, c)),
      decision("(7)", near(wm, b, c)),
  };
  check_agreement(c, "seven-way-agreement", items);
  if (kind == 0) {
    const bool all = std::all_of(items.begin(), items.end(), [](const Decision& d) { return d.holds(); });
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& d : items) worst = std::min(worst, d.margin);
    c.check("near-ordered-pairs-satisfy-all", all, worst, "near-ordered sample");
  } else {
    c.skip("near-ordered-pairs-satisfy-all");
  }
  c.count(kind == 0 ? "pairs.near_ordered" : kind == 1 ? "pairs.reversed" : "pairs.unordered");
}

constexpr std::array<double, 7> kMonoGrid = {-0.5, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5};

struct ParamCurve {
  std::vector<HpdMatrix> spectral;
  std::vector<std::optional<HpdMatrix>> wasserstein;
};

ParamCurve param_curve(const HpdMatrix& a, const HpdMatrix& b) {
  ParamCurve pc;
  for (double t : kMonoGrid) {
    pc.spectral.push_back(spectral_geometric(a, b, t));
    try {
      pc.wasserstein.emplace_back(wasserstein_mean(a, b, t));
    } catch (const DomainError&) {
      pc.wasserstein.emplace_back(std::nullopt);
    }
  }
  return pc;
}

std::string st_label(std::size_t i, std::size_t j) {
  return param("s", kMonoGrid[i]) + " " + param("t", kMonoGrid[j]);
}

void trial_mono_sp_wass(Trial& c) {
  const NearOrderedPair p = random_near_ordered_pair(spec_for(c));
  const ParamCurve fwd = param_curve(p.a, p.b);
  for (std::size_t i = 0; i < kMonoGrid.size(); ++i)
    for (std::size_t j = i + 1; j < kMonoGrid.size(); ++j) {
      c.verdict("forward-spectral", near(fwd.spectral[i], fwd.spectral[j], c), st_label(i, j));
      if (fwd.wasserstein[i] && fwd.wasserstein[j])
        c.verdict("forward-wasserstein", near(*fwd.wasserstein[i], *fwd.wasserstein[j], c),
                  st_label(i, j));
      else
        c.count("wasserstein.outside_domain");
    }

  const HpdMatrix a = hpd(c), b = hpd(c);
  const Decision base = decision("A<=B", near(a, b, c));
  const ParamCurve rev = param_curve(a, b);
  for (std::size_t i = 0; i < kMonoGrid.size(); ++i)
    for (std::size_t j = i + 1; j < kMonoGrid.size(); ++j) {
      check_agreement(c, "iff-spectral",
                      {base, decision(st_label(i, j), near(rev.spectral[i], rev.spectral[j], c))});
      if (rev.wasserstein[i] && rev.wasserstein[j])
        check_agreement(c, "iff-wasserstein",
                        {base, decision(st_label(i, j),
                                        near(*rev.wasserstein[i], *rev.wasserstein[j], c))});
    }
  if (base.holds()) c.count("unordered.happened_to_be_ordered");
}

void trial_in_betweenness(Trial& c) {
  const NearOrderedPair p = random_near_ordered_pair(spec_for(c));
  for (double t : {0.25, 0.5, 0.75}) {
    const std::string lt = param("t", t);
    const HpdMatrix sg = spectral_geometric(p.a, p.b, t);
    const HpdMatrix wm = wasserstein_mean(p.a, p.b, t);
    c.verdict("spectral-lower", near(p.a, sg, c), "A <= A natural_t B " + lt);
    c.verdict("spectral-upper", near(sg, p.b, c), "A natural_t B <= B " + lt);
    c.verdict("wasserstein-lower", near(p.a, wm, c), "A <= A diamond_t B " + lt);
    c.verdict("wasserstein-upper", near(wm, p.b, c), "A diamond_t B <= B " + lt);
  }
  const SampledPair l = random_loewner_pair(spec_for(c));
  for (double t : {0.25, 0.5, 0.75}) {
    const HpdMatrix g = metric_geometric(l.a, l.b, t);
    c.verdict("metric-loewner", loewner_cmp(l.a, g, c.tol()), "A <= A #_t B " + param("t", t));
    c.verdict("metric-loewner", loewner_cmp(g, l.b, c.tol()), "A #_t B <= B " + param("t", t));
  }
}

void trial_near_sp_wass(Trial& c) {
  const HpdMatrix a = hpd(c), b = hpd(c);
  for (int k = 1; k <= 9; ++k) {
    const double t = 0.1 * k;
    c.verdict("spectral-below-wasserstein",
              near(spectral_geometric(a, b, t), wasserstein_mean(a, b, t), c), param("t", t));
  }
  const Matrix h = a.sqrt().matrix();
  for (double t : {0.25, 0.5, 0.75})
    c.verdict("congruence-by-sqrt",
              near(congruence(h, spectral_geometric(a, b, t)), congruence(h, wasserstein_mean(a, b, t)), c),
              "A^1/2 (A natural_t B) A^1/2 <= A^1/2 (A diamond_t B) A^1/2 " + param("t", t));

  const SampledPair l = random_loewner_pair(spec_for(c));
  const HpdMatrix ai = l.a.inverse();
  const HpdMatrix x = wasserstein_mean(ai, l.b, 0.5);
  c.verdict("inverse-wasserstein-above-identity",
            OrderVerdict::make(x.min_eigenvalue() - 1.0, c.tol().effective(ai, l.b),
                               "lambda_min(A^-1 diamond B) - 1", 0),
            "Loewner pair");
}

constexpr double kFidelityLo = 0.5;
constexpr double kFidelityHi = 2.0;

double pow2(int k) { return std::ldexp(1.0, k); }

// A^{1/2} <= F(A,B)  implies  A^{2^{n-1}} <= F(A^{2^n}, B), n = 1, 2, 3.
void fidelity_item1(Trial& c, const HpdMatrix& a, const HpdMatrix& b, std::string_view prop,
                    bool sampled) {
  const OrderVerdict premise = near(a.sqrt(), fidelity(a, b), c);
  if (sampled) {
    if (premise.margin <= premise.tolerance) {
      c.vacuous(prop);
      return;
    }
    c.count("sampled.item1_premise_holds");
  } else {
    c.verdict("generator-premise", premise, "A^1/2 <= F(A,B) with B >= I");
  }
  for (int n = 1; n <= 3; ++n)
    c.verdict(prop, near(a.pow(pow2(n - 1)), fidelity(a.pow(pow2(n)), b), c),
              "A^(2^(n-1)) <= F(A^(2^n),B) n=" + std::to_string(n));
}

// F(B,A) <= B^{1/2}  implies  F(B^{2^n}, A) <= B^{2^{n-1}}, n = 1, 2, 3.
void fidelity_item2(Trial& c, const HpdMatrix& a, const HpdMatrix& b, std::string_view prop,
                    bool sampled) {
  const OrderVerdict premise = near(fidelity(b, a), b.sqrt(), c);
  if (sampled) {
    if (premise.margin <= premise.tolerance) {
      c.vacuous(prop);
      return;
    }
    c.count("sampled.item2_premise_holds");
  } else {
    c.verdict("generator-premise", premise, "F(B,A) <= B^1/2 with A <= I");
  }
  for (int n = 1; n <= 3; ++n)
    c.verdict(prop, near(fidelity(b.pow(pow2(n)), a), b.pow(pow2(n - 1)), c),
              "F(B^(2^n),A) <= B^(2^(n-1)) n=" + std::to_string(n));
}

void trial_fidelity(Trial& c) {
  {
    const HpdMatrix a = hpd(c, kFidelityLo, kFidelityHi);
    const HpdMatrix b = hpd(c, 1.0, 2.0 * kFidelityHi);
    fidelity_item1(c, a, b, "item-1", false);
  }
  {
    const HpdMatrix b = hpd(c, kFidelityLo, kFidelityHi);
    const HpdMatrix a = hpd(c, 0.25, 1.0);
    fidelity_item2(c, a, b, "item-2", false);
  }
  const HpdMatrix a = hpd(c, kFidelityLo, kFidelityHi), b = hpd(c, kFidelityLo, kFidelityHi);
  fidelity_item1(c, a, b, "item-1-sampled", true);
  fidelity_item2(c, a, b, "item-2-sampled", true);
}

void trial_relation_chain(Trial& c) {
  static constexpr std::array<const char*, 5> kClasses = {"loewner", "chaotic", "near", "commuting",
                                                          "unordered"};
  const int kind = c.index() % 5;
  HpdMatrix a = HpdMatrix::identity(c.dim()), b = a;
  switch (kind) {
    case 0: {
      SampledPair p = random_loewner_pair(spec_for(c));
      a = p.a, b = p.b;
      break;
    }
    case 1: {
      SampledPair p = random_chaotic_pair(spec_for(c));
      a = p.a, b = p.b;
      break;
    }
    case 2: {
      NearOrderedPair p = random_near_ordered_pair(spec_for(c));
      a = p.a, b = p.b;
      break;
    }
    case 3: {
      MatrixTuple fam = random_commuting_family(spec_for(c), 2);
      a = fam[0], b = fam[1];
      break;
    }
    default:
      a = hpd(c);
      b = hpd(c);
  }
  const std::string cls = kClasses[kind];
  c.count("class." + cls);

  const RelationProfile prof = compute_relation_profile(a, b, c.tol());
  const std::array<const OrderVerdict*, 5> chain = {&prof.loewner, &prof.chaotic, &prof.near,
                                                    &prof.eigen_entrywise, &prof.weak_log_major};
  double worst = std::numeric_limits<double>::infinity();
  bool premise = false;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    if (chain[k]->holds) {
      premise = true;
      worst = std::min(worst, chain[k + 1]->margin);
    }
  const auto violations = prof.chain_violations();
  if (!violations.empty()) {
    std::string what = cls + " sample, broken links:";
    for (const auto& v : violations) what += " " + v;
    c.check("implication-chain", false, worst, what);
  } else if (premise) {
    c.check("implication-chain", true, worst, cls + " sample");
  } else {
    c.vacuous("implication-chain");
  }

  switch (kind) {
    case 0: c.verdict("constructed-relation", prof.loewner, "B = A + P"); break;
    case 1: c.verdict("constructed-relation", prof.chaotic, "log B = log A + P"); break;
    case 2: c.verdict("constructed-relation", prof.near, "B = CAC, C >= I"); break;
    case 3:
      check_agreement(c, "constructed-relation",
                      {decision("loewner", prof.loewner), decision("near", prof.near)});
      break;
    default: c.skip("constructed-relation");
  }
  if (kind == 2 && prof.near.holds && !prof.loewner.holds) c.count("near_without_loewner");
  if (kind == 1 && c.dim() >= 3 && !prof.loewner.holds) c.count("chaotic_without_loewner_dim3plus");

  if (prof.near.holds) {
    for (double p : {1.0, 1.5, 2.0, 3.0})
      c.verdict("power-monotonicity", near(a.pow(p), b.pow(p), c), "A^p <= B^p " + param("p", p));
    for (double p : {-1.0, -2.0})
      c.verdict("power-monotonicity", near(b.pow(p), a.pow(p), c), "B^p <= A^p " + param("p", p));
  } else {
    c.vacuous("power-monotonicity");
  }

  auto antisymmetry = [&](const HpdMatrix& x, const HpdMatrix& y, const std::string& label) {
    if (near(x, y, c).holds && near(y, x, c).holds)
      c.bound("antisymmetry", operator_norm(x.hermitian() - y.hermitian()),
              1e-6 * operator_norm(x), label + ": ||A - B||");
    else
      c.vacuous("antisymmetry");
  };
  antisymmetry(a, b, cls + " sample");
  antisymmetry(a, a, "A vs A");
}

void trial_kim18(Trial& c) {
  const int n = c.rng().uniform_int(2, 5);
  const MatrixTuple a = tuple(c, n);
  const WeightVector w = random_weights(c.rng(), n);
  const double s = c.rng().uniform(1.0, 3.0), t = c.rng().uniform(s, 3.0);
  const std::string st = param("s", s) + " " + param("t", t);
  const HpdMatrix qmt = quasi_arithmetic(-t, w, a), qms = quasi_arithmetic(-s, w, a);
  const HpdMatrix h = harmonic_mean(w, a), ar = arithmetic_mean(w, a);
  const HpdMatrix qs = quasi_arithmetic(s, w, a), qt = quasi_arithmetic(t, w, a);
  const ToleranceProfile& tol = c.tol();
  c.verdict("Q(-t)<=Q(-s)", loewner_cmp(qmt, qms, tol), st);
  c.verdict("Q(-s)<=H", loewner_cmp(qms, h, tol), st);
  c.verdict("H<=A", loewner_cmp(h, ar, tol), st);
  c.verdict("A<=Q(s)", loewner_cmp(ar, qs, tol), st);
  c.verdict("Q(s)<=Q(t)", loewner_cmp(qs, qt, tol), st);

  const double p = c.rng().uniform(0.1, 3.0);
  for (double q : {p, -p})
    c.bound("quasi-duality",
            rel_err(quasi_arithmetic(-q, w, a.inverted()).inverse(), quasi_arithmetic(q, w, a)), 1e-9,
            "Q_p(A) vs Q_-p(A^-1)^-1 " + param("p", q));
}

void trial_mono_variables(Trial& c) {
  const int n = c.rng().uniform_int(2, 5);
  std::vector<HpdMatrix> lo, hi;
  for (int j = 0; j < n; ++j) {
    SampledPair p = random_loewner_pair(spec_for(c));
    lo.push_back(std::move(p.a));
    hi.push_back(std::move(p.b));
  }
  const MatrixTuple a(std::move(lo)), b(std::move(hi));
  const WeightVector w = random_weights(c.rng(), n);
  for (double p : {0.25, 0.5, 1.0}) {
    c.verdict("positive-p", near(quasi_arithmetic(p, w, a), quasi_arithmetic(p, w, b), c), param("p", p));
    c.verdict("negative-p", near(quasi_arithmetic(-p, w, a), quasi_arithmetic(-p, w, b), c),
              param("p", -p));
  }
}

constexpr std::array<double, 5> kParameterGrid = {0.1, 0.3, 0.5, 0.8, 1.0};

struct QuasiLadder {
  std::vector<HpdMatrix> pos, neg;
  HpdMatrix le, h, ar;
};

QuasiLadder quasi_ladder(const WeightVector& w, const MatrixTuple& a) {
  QuasiLadder q{{}, {}, log_euclidean(w, a), harmonic_mean(w, a), arithmetic_mean(w, a)};
  for (double p : kParameterGrid) {
    q.pos.push_back(quasi_arithmetic(p, w, a));
    q.neg.push_back(quasi_arithmetic(-p, w, a));
  }
  return q;
}

// Visits every link of H <= Q_-q <= Q_-p <= LE <= Q_p <= Q_q <= A over the grid.
template <class Visit>
void visit_parameter_chain(const QuasiLadder& q, Visit&& visit) {
  for (std::size_t j = 0; j < kParameterGrid.size(); ++j) {
    const std::string lq = param("q", kParameterGrid[j]);
    visit("H<=Q(-q)", q.h, q.neg[j], lq);
    visit("Q(-p)<=LE", q.neg[j], q.le, param("p", kParameterGrid[j]));
    visit("LE<=Q(p)", q.le, q.pos[j], param("p", kParameterGrid[j]));
    visit("Q(q)<=A", q.pos[j], q.ar, lq);
    for (std::size_t i = 0; i < j; ++i) {
      const std::string lpq = param("p", kParameterGrid[i]) + " " + lq;
      visit("Q(-q)<=Q(-p)", q.neg[j], q.neg[i], lpq);
      visit("Q(p)<=Q(q)", q.pos[i], q.pos[j], lpq);
    }
  }
}

void trial_mono_parameters(Trial& c) {
  const int n = c.rng().uniform_int(2, 5);
  const MatrixTuple a = tuple(c, n);
  const WeightVector w = random_weights(c.rng(), n);
  visit_parameter_chain(quasi_ladder(w, a),
                        [&](const char* link, const HpdMatrix& x, const HpdMatrix& y,
                            const std::string& label) { c.verdict(link, near(x, y, c), label); });

  const HpdMatrix x = hpd(c);
  const MatrixTuple constant(std::vector<HpdMatrix>(n, x));
  double worst = 0.0;
  visit_parameter_chain(quasi_ladder(w, constant),
                        [&](const char*, const HpdMatrix& p, const HpdMatrix& q, const std::string&) {
                          worst = std::max(worst, std::abs(near(p, q, c).margin));
                        });
  c.bound("constant-tuple-margins", worst, 1e-10, "max |margin| on (X,...,X)");

  const HpdMatrix le = log_euclidean(w, a);
  for (double p : {0.1, 0.03, 0.01, 0.003, 0.001}) {
    c.verdict("limit-surrogate", near(le, quasi_arithmetic(p, w, a), c), "LE <= Q_p " + param("p", p));
    c.verdict("limit-surrogate", near(quasi_arithmetic(-p, w, a), le, c), "Q_-p <= LE " + param("p", p));
  }
}

void trial_mixed_chain(Trial& c) {
  const int n = c.rng().uniform_int(2, 5);
  const MatrixTuple a = tuple(c, n);
  const WeightVector w = random_weights(c.rng(), n);
  const double p = c.rng().uniform(1.0, 3.0), q = c.rng().uniform(p, 3.0);
  const std::string pq = param("p", p) + " " + param("q", q);
  struct Node {
    const char* name;
    HpdMatrix value;
  };
  const std::vector<Node> nodes = {
      {"Q(-q)", quasi_arithmetic(-q, w, a)},         {"Q(-p)", quasi_arithmetic(-p, w, a)},
      {"H", harmonic_mean(w, a)},                    {"Q(-1/p)", quasi_arithmetic(-1 / p, w, a)},
      {"Q(-1/q)", quasi_arithmetic(-1 / q, w, a)},   {"LE", log_euclidean(w, a)},
      {"Q(1/q)", quasi_arithmetic(1 / q, w, a)},     {"Q(1/p)", quasi_arithmetic(1 / p, w, a)},
      {"A", arithmetic_mean(w, a)},                  {"Q(p)", quasi_arithmetic(p, w, a)},
      {"Q(q)", quasi_arithmetic(q, w, a)},
  };
  // 'L' Loewner link, 'N' near-order link, 'J' the Q_1/p <= A link. As a
  // Loewner link that one is operator Jensen for x^p and only follows for
  // p <= 2; for larger p it is checked in the near order and the Loewner
  // form is recorded as a diagnostic.
  constexpr std::array<char, 10> kinds = {'L', 'L', 'N', 'N', 'N', 'N', 'N', 'J', 'L', 'L'};
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    const HpdMatrix& x = nodes[k].value;
    const HpdMatrix& y = nodes[k + 1].value;
    const std::string label = std::string(nodes[k].name) + " <= " + nodes[k + 1].name + " " + pq;
    if (kinds[k] == 'L') {
      c.verdict("loewner-links", loewner_cmp(x, y, c.tol()), label);
    } else if (kinds[k] == 'N') {
      c.verdict("near-links", near(x, y, c), label);
    } else {
      const OrderVerdict lw = loewner_cmp(x, y, c.tol());
      c.verdict("Q(1/p)<=A-near", near(x, y, c), label);
      if (p <= 2.0)
        c.verdict("Q(1/p)<=A-loewner-p<=2", lw, label);
      else
        c.skip("Q(1/p)<=A-loewner-p<=2");
      c.verdict("Q(1/p)<=A-loewner-as-printed", lw, label);
    }
  }
}

constexpr std::array<std::pair<double, double>, 4> kRenyiParams = {
    {{0.0, 0.5}, {0.2, 0.6}, {0.5, 0.75}, {0.7, 1.0}}};

std::string tz_label(double t, double z) { return param("t", t) + " " + param("z", z); }

void trial_renyi_properties(Trial& c) {
  const auto [t, z] = kRenyiParams[c.index() % kRenyiParams.size()];
  const std::string tz = tz_label(t, z);
  const int n = c.rng().uniform_int(2, 4);
  const MatrixTuple a = tuple(c, n);
  const WeightVector w = random_weights(c.rng(), n);
  const SolverConfig& cfg = c.solver();

  std::optional<SolveResult> base;
  try {
    base = renyi_power_mean(t, z, w, a, cfg);
  } catch (const SolverFailure& e) {
    c.check("convergence", false, -e.trace().iterations, tz + ": " + e.what());
    return;
  }
  const HpdMatrix& r = base->value;
  const int iters = base->trace.iterations;
  c.check("convergence", base->trace.converged && iters <= 200, 200.0 - iters,
          tz + ": iterations=" + std::to_string(iters) +
              " residual=" + fmt(base->trace.residual_history.back()));

  if (t == 0.0)
    c.bound("t0-arithmetic", rel_err(r, arithmetic_mean(w, a)), 1e-11, "R_0,z vs sum w A " + tz);
  else
    c.skip("t0-arithmetic");

  const MatrixTuple fam = random_commuting_family(spec_for(c), n);
  c.bound("commuting-reduction",
          rel_err(renyi_power_mean(t, z, w, fam, cfg).value, quasi_arithmetic(1 - t, w, fam)), 1e-8,
          "commuting R vs Q_(1-t) " + tz);

  for (double k : {0.1, 7.0})
    c.bound("homogeneity", rel_err(renyi_power_mean(t, z, w, a.scaled(k), cfg).value, r.scaled(k)),
            1e-9, "R(cA) vs cR(A) " + param("c", k) + " " + tz);

  const std::vector<int> sigma = random_permutation(c.rng(), n);
  c.bound("permutation-invariance",
          rel_err(renyi_power_mean(t, z, w.permuted(sigma), a.permuted(sigma), cfg).value, r), 1e-9,
          "R(w_sigma; A_sigma) vs R " + tz);

  for (int k : {2, 3})
    c.bound("block-repetition",
            rel_err(renyi_power_mean(t, z, w.repeated(k), a.repeated(k), cfg).value, r), 1e-9,
            "R(w^(k); A^(k)) vs R k=" + std::to_string(k) + " " + tz);

  const Matrix u = random_unitary(c.rng(), c.dim());
  c.bound("unitary-covariance",
          rel_err(renyi_power_mean(t, z, w, a.congruent(u), cfg).value, congruence(u, r)), 1e-9,
          "R(U A U*) vs U R U* " + tz);

  c.verdict("inverse-bound",
            loewner_cmp(r.inverse(), renyi_power_mean(t, z, w, a.inverted(), cfg).value, c.tol()),
            "R^-1 <= R(A^-1) " + tz);

  if (t >= 0.5) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += w[j] * operator_norm(a[j]);
    c.bound("norm-bound", operator_norm(r), s + 1e-8, "||R|| vs sum w ||A_j|| " + tz);
  } else {
    c.skip("norm-bound");
  }
}

void trial_renyi_logdet(Trial& c) {
  const auto [t, z] = kRenyiParams[c.index() % kRenyiParams.size()];
  const std::string tz = tz_label(t, z);
  const int n = c.rng().uniform_int(2, 5);
  const MatrixTuple a = tuple(c, n);
  const WeightVector w = random_weights(c.rng(), n);
  const HpdMatrix r = renyi_power_mean(t, z, w, a, c.solver()).value;
  double rhs = 0.0;
  for (int j = 0; j < n; ++j) rhs += w[j] * log_det(a[j]);
  c.bound("log-det-bound", rhs - log_det(r), 1e-8, "sum w log det A_j - log det R " + tz);

  const HpdMatrix x = hpd(c);
  const MatrixTuple constant(std::vector<HpdMatrix>(n, x));
  const HpdMatrix rc = renyi_power_mean(t, z, w, constant, c.solver()).value;
  c.bound("constant-equality", std::abs(log_det(rc) - log_det(x)), 1e-6,
          "|log det R(X,...,X) - log det X| " + tz);
}

// Spectra strictly inside (0, 1) or (1, inf), so the hypotheses survive
// rounding in the eigensolver.
constexpr double kBelowHi = 0.98;
constexpr double kAboveLo = 1.02;

void trial_renyi_quasi(Trial& c) {
  const bool below = c.index() % 2 == 0;
  const auto [t, z] = kRenyiParams[(c.index() / 2) % kRenyiParams.size()];
  const std::string tz = tz_label(t, z);
  const int n = c.rng().uniform_int(2, 5);
  const MatrixTuple a = below ? tuple(c, n, kDefaultLo, kBelowHi) : tuple(c, n, kAboveLo, kDefaultHi);
  const WeightVector w = random_weights(c.rng(), n);
  const HpdMatrix r = renyi_power_mean(t, z, w, a, c.solver()).value;
  const HpdMatrix id = HpdMatrix::identity(c.dim());
  const HpdMatrix rp = r.pow(1.0 / (1.0 - t));
  const HpdMatrix q = quasi_arithmetic(1.0 - t, w, a);
  if (below) {
    const OrderVerdict hyp = loewner_cmp(r, id, c.tol());
    c.verdict("R<=I-below", hyp, "spectra in (0,1] " + tz);
    if (hyp.holds)
      c.verdict("item-i", near(rp, q, c), "R^(1/(1-t)) <= Q_(1-t) " + tz);
    else
      c.vacuous("item-i");
    c.skip("R>=I-above");
    c.skip("item-ii");
    c.skip("remark-le-bound");
  } else {
    const OrderVerdict hyp = loewner_cmp(id, r, c.tol());
    c.verdict("R>=I-above", hyp, "spectra in [1,inf) " + tz);
    if (hyp.holds) {
      c.verdict("item-ii", near(q, rp, c), "Q_(1-t) <= R^(1/(1-t)) " + tz);
      c.verdict("remark-le-bound", near(log_euclidean(w, a), rp, c), "LE <= R^(1/(1-t)) " + tz);
    } else {
      c.vacuous("item-ii");
      c.vacuous("remark-le-bound");
    }
    c.skip("R<=I-below");
    c.skip("item-i");
  }
}

const std::vector<double> kRenyiZeroGrid = {0.2, 0.1, 0.05};

void trial_renyi_le(Trial& c) {
  const bool below = c.index() % 2 == 0;
  const auto [t, z] = kRenyiParams[(c.index() / 2) % kRenyiParams.size()];
  const std::string tz = tz_label(t, z);
  const int n = c.rng().uniform_int(2, 5);
  const MatrixTuple a = below ? tuple(c, n, kDefaultLo, kBelowHi) : tuple(c, n, kAboveLo, kDefaultHi);
  const WeightVector w = random_weights(c.rng(), n);
  const RenyiHypothesis hyp = below ? RenyiHypothesis::BelowIdentity : RenyiHypothesis::AboveIdentity;
  const LimitStudyReport study =
      renyi_zero_limit_study(t, z, w, a, kRenyiZeroGrid, hyp, c.tol(), c.solver());
  for (const auto& v : study.verdicts) {
    const std::string label = v.check + " " + param("p", kRenyiZeroGrid[v.grid_index]) + " " + tz;
    if (v.check.rfind("R(A^-p)^(-1/p)<=", 0) == 0)
      c.verdict("two-sided-limit", v.verdict, label);
    else
      c.verdict(below ? "Q_p-surrogate-below" : "Q_p-surrogate-above", v.verdict, label);
  }
  for (const auto& v : study.diagnostics)
    c.verdict(below ? "le-bound-below" : "le-bound-above", v.verdict,
              v.check + " " + param("p", kRenyiZeroGrid[v.grid_index]) + " " + tz);
  c.skip(below ? "Q_p-surrogate-above" : "Q_p-surrogate-below");
  c.skip(below ? "le-bound-above" : "le-bound-below");
}

void trial_le_near(Trial& c) {
  const int n = c.rng().uniform_int(2, 6);
  const MatrixTuple a = tuple(c, n);
  const WeightVector w = random_weights(c.rng(), n);
  const HpdMatrix le = log_euclidean(w, a), h = harmonic_mean(w, a), ar = arithmetic_mean(w, a);
  c.verdict("H<=LE", near(h, le, c), "n=" + std::to_string(n));
  c.verdict("LE<=A", near(le, ar, c), "n=" + std::to_string(n));
  c.verdict("LE-wlog-A", weak_log_majorization_cmp(le, ar, c.tol()), "n=" + std::to_string(n));
}

const std::vector<double> kLieTrotterGrid = {0.02, 0.01, 0.005, 0.0025};

void trial_lie_trotter(Trial& c) {
  const int n = c.rng().uniform_int(2, 4);
  std::vector<Curve> curves;
  for (int j = 0; j < n; ++j)
    curves.emplace_back(random_hermitian(c.rng(), c.dim(), c.rng().uniform(0.25, 1.0)));
  const WeightVector w = random_weights(c.rng(), n);

  MultiMean arith{MultiMean::Kind::Arithmetic}, harm{MultiMean::Kind::Harmonic};
  MultiMean qpos{MultiMean::Kind::Quasi}, qneg{MultiMean::Kind::Quasi};
  qpos.p = 0.5;
  qneg.p = -0.5;
  const std::array<const MultiMean*, 4> means = {&arith, &harm, &qpos, &qneg};
  std::vector<LimitStudyReport> studies;
  for (const MultiMean* m : means) {
    studies.push_back(lie_trotter_limit_study(*m, w, curves, kLieTrotterGrid, c.tol()));
    const LimitStudyReport& s = studies.back();
    const std::string name = m->name();
    if (s.estimated_order)
      c.check("order-in-range", std::abs(*s.estimated_order - 1.0) <= 0.3,
              0.3 - std::abs(*s.estimated_order - 1.0), name + " order=" + fmt(*s.estimated_order));
    else
      c.check("order-in-range", false, -1.0, name + ": order undefined (zero error)");
    c.bound("terminal-error", s.errors.back(), 5e-3, name + " E(2.5e-3)");
    for (std::size_t i = 0; i + 1 < s.errors.size(); ++i)
      c.check("error-decreasing", s.errors[i + 1] < s.errors[i], s.errors[i] - s.errors[i + 1],
              name + " E(" + fmt(kLieTrotterGrid[i + 1]) + ") vs E(" + fmt(kLieTrotterGrid[i]) + ")");
    for (const auto& v : s.verdicts)
      c.verdict("sandwich", v.verdict, name + " " + v.check + " " + param("s", kLieTrotterGrid[v.grid_index]));
  }
  for (std::size_t k = 2; k < studies.size(); ++k)
    for (std::size_t i = 0; i < kLieTrotterGrid.size(); ++i)
      c.bound("error-sandwich", studies[k].errors[i],
              std::max(studies[0].errors[i], studies[1].errors[i]) + 1e-6,
              means[k]->name() + " E(" + fmt(kLieTrotterGrid[i]) + ")");

  const double s = kLieTrotterGrid.back();
  std::vector<HpdMatrix> points;
  for (const auto& cv : curves) points.push_back(cv.at(s));
  const MatrixTuple tup(std::move(points));
  c.bound("cross-mean-target",
          thompson_distance(arithmetic_mean(w, tup).pow(1 / s), harmonic_mean(w, tup).pow(1 / s)), 5e-3,
          "d_T(A^(1/s), H^(1/s)) at s=2.5e-3");
}

void trial_cartan_le_wass(Trial& c) {
  const int n = c.rng().uniform_int(2, 5);
  const MatrixTuple a = tuple(c, n);
  const WeightVector w = random_weights(c.rng(), n);
  const SolverConfig& cfg = c.solver();
  const std::string ln = "n=" + std::to_string(n);

  std::optional<SolveResult> karcher, bary;
  try {
    karcher = karcher_mean(w, a, cfg);
  } catch (const SolverFailure& e) {
    c.check("karcher-residual", false, -1.0, ln + ": " + e.what());
  }
  try {
    bary = wasserstein_barycenter(w, a, cfg);
  } catch (const SolverFailure& e) {
    c.check("barycenter-residual", false, -1.0, ln + ": " + e.what());
  }
  const HpdMatrix le = log_euclidean(w, a);
  if (karcher) {
    c.bound("karcher-residual", karcher_residual(w, a, karcher->value), cfg.residual_tol,
            ln + " ||sum w log(X^1/2 A^-1 X^1/2)||");
    c.verdict("karcher-logmajorized-by-LE",
              weak_log_majorization_cmp(karcher->value, le, c.tol(), true), ln);
  }
  if (bary) {
    const HpdMatrix& om = bary->value;
    c.bound("barycenter-residual", relative_gap(om, barycenter_map(w, a, om)), cfg.residual_tol,
            ln + " fixed-point residual");
    c.verdict("LE-wlog-Omega", weak_log_majorization_cmp(le, om, c.tol()), ln);
    c.verdict("Omega<=A", loewner_cmp(om, arithmetic_mean(w, a), c.tol()), ln);
  }

  const double t = c.rng().uniform(0.1, 0.9);
  const MatrixTuple pair(std::vector<HpdMatrix>{a[0], a[1]});
  c.bound("barycenter-pair-agreement",
          rel_err(wasserstein_barycenter(WeightVector({1 - t, t}), pair, cfg).value,
                  wasserstein_mean(a[0], a[1], t)),
          1e-8, "n=2 barycenter vs diamond_t " + param("t", t));
}

// ---------------------------------------------------------------------------

struct SuiteEntry {
  SuiteInfo info;
  void (*run)(Trial&);
};

const std::vector<SuiteEntry>& entries() {
  static const std::vector<SuiteEntry> kEntries = {
      {{"thompson-lemma",
        "Thompson metric: inversion and congruence invariance, sum and power contraction, "
        "geodesic convexity of #_t; identities of the two-variable means",
        {"inverse-invariance", "congruence-invariance", "symmetry", "sum-contraction",
         "power-contraction", "geodesic-convexity", "metric-mean-congruence", "riccati-residual",
         "commuting-collapse", "endpoint-exactness", "wasserstein-fixed-point",
         "wasserstein-polynomial-form", "spectral-geodesic", "bures-symmetry",
         "fidelity-trace-symmetry"},
        {"geodesic-convexity-as-printed"}},
       trial_thompson_lemma},
      {{"equivalence-7way",
        "A <= B (near) iff A^-1#B >= I iff A#B^-1 <= I iff A natural_t B >= A iff "
        "A natural_t B <= B iff A diamond_t B >= A iff A diamond_t B <= B",
        {"seven-way-agreement", "near-ordered-pairs-satisfy-all"},
        {}},
       trial_equivalence},
      {{"mono-sp-wass",
        "For s < t: A <= B iff A natural_s B <= A natural_t B iff A diamond_s B <= A diamond_t B",
        {"forward-spectral", "forward-wasserstein", "iff-spectral", "iff-wasserstein"},
        {}},
       trial_mono_sp_wass},
      {{"in-betweenness",
        "A <= B implies A <= A natural_t B <= B and A <= A diamond_t B <= B (near order); "
        "A <= A #_t B <= B (Loewner)",
        {"spectral-lower", "spectral-upper", "wasserstein-lower", "wasserstein-upper",
         "metric-loewner"},
        {}},
       trial_in_betweenness},
      {{"near-sp-wass",
        "A natural_t B <= A diamond_t B; A <= B (Loewner) implies A^-1 diamond B >= I; "
        "A^1/2 (A natural_t B) A^1/2 <= A^1/2 (A diamond_t B) A^1/2",
        {"spectral-below-wasserstein", "inverse-wasserstein-above-identity", "congruence-by-sqrt"},
        {}},
       trial_near_sp_wass},
      {{"fidelity-recursion",
        "A^1/2 <= F(A,B) implies A^(2^(n-1)) <= F(A^(2^n),B); "
        "F(B,A) <= B^1/2 implies F(B^(2^n),A) <= B^(2^(n-1))",
        {"generator-premise", "item-1", "item-2", "item-1-sampled", "item-2-sampled"},
        {}},
       trial_fidelity},
      {{"relation-chain",
        "A <= B (Loewner) => log A <= log B => A <= B (near) => A <=_lambda B => A <_wlog B; "
        "near order monotone under powers p >= 1 and antitone for p <= -1; antisymmetry",
        {"implication-chain", "constructed-relation", "power-monotonicity", "antisymmetry"},
        {}},
       trial_relation_chain},
      {{"kim18-chain",
        "For 1 <= s <= t: Q_-t <= Q_-s <= H <= A <= Q_s <= Q_t (Loewner); Q_p(A) = Q_-p(A^-1)^-1",
        {"Q(-t)<=Q(-s)", "Q(-s)<=H", "H<=A", "A<=Q(s)", "Q(s)<=Q(t)", "quasi-duality"},
        {}},
       trial_kim18},
      {{"mono-variables",
        "A_j <= B_j (Loewner) for all j implies Q_p(w; A) <= Q_p(w; B) (near) for 0 < |p| <= 1",
        {"positive-p", "negative-p"},
        {}},
       trial_mono_variables},
      {{"mono-parameters",
        "For 0 < p <= q <= 1: H <= Q_-q <= Q_-p <= LE <= Q_p <= Q_q <= A (near order)",
        {"H<=Q(-q)", "Q(-q)<=Q(-p)", "Q(-p)<=LE", "LE<=Q(p)", "Q(p)<=Q(q)", "Q(q)<=A",
         "constant-tuple-margins", "limit-surrogate"},
        {},
        6},
       trial_mono_parameters},
      {{"mixed-chain",
        "For 1 <= p <= q: Q_-q <= Q_-p <= H near Q_-1/p near Q_-1/q near LE near Q_1/q near "
        "Q_1/p <= A <= Q_p <= Q_q",
        {"loewner-links", "near-links", "Q(1/p)<=A-near", "Q(1/p)<=A-loewner-p<=2"},
        {"Q(1/p)<=A-loewner-as-printed"}},
       trial_mixed_chain},
      {{"renyi-properties",
        "Renyi power mean: fixed-point convergence, commuting reduction to Q_(1-t), homogeneity, "
        "permutation and block invariance, unitary covariance, R(A^-1) >= R(A)^-1, norm bound",
        {"convergence", "t0-arithmetic", "commuting-reduction", "homogeneity",
         "permutation-invariance", "block-repetition", "unitary-covariance", "inverse-bound",
         "norm-bound"},
        {},
        8},
       trial_renyi_properties},
      {{"renyi-logdet",
        "det R_t,z(w; A) >= prod (det A_j)^w_j, with equality on constant tuples",
        {"log-det-bound", "constant-equality"},
        {},
        8},
       trial_renyi_logdet},
      {{"renyi-quasi",
        "R <= I implies R^(1/(1-t)) <= Q_(1-t); R >= I implies R^(1/(1-t)) >= Q_(1-t) >= LE",
        {"R<=I-below", "R>=I-above", "item-i", "item-ii", "remark-le-bound"},
        {},
        8},
       trial_renyi_quasi},
      {{"renyi-le",
        "R(A^-p)^(-1/p) <= R(A^p)^(1/p); with A_j <= I: R(A^p)^(1/p) <= Q_p(A^(1-t)); "
        "with A_j >= I: Q_-p(A^(1-t)) <= R(A^-p)^(-1/p)",
        {"two-sided-limit", "Q_p-surrogate-below", "Q_p-surrogate-above"},
        {"le-bound-below", "le-bound-above"},
        8},
       trial_renyi_le},
      {{"le-near", "H <= LE <= A (near order) and LE <_wlog A",
        {"H<=LE", "LE<=A", "LE-wlog-A"},
        {}},
       trial_le_near},
      {{"lie-trotter",
        "Means between H and A in the near order are Lie-Trotter means: "
        "G(exp(sH_1),...,exp(sH_n))^(1/s) -> exp(sum w_j H_j)",
        {"order-in-range", "terminal-error", "error-decreasing", "sandwich", "error-sandwich",
         "cross-mean-target"},
        {},
        4},
       trial_lie_trotter},
      {{"cartan-le-wass",
        "Karcher mean <_log LE <_wlog Wasserstein barycenter <= A",
        {"karcher-residual", "karcher-logmajorized-by-LE", "barycenter-residual", "LE-wlog-Omega",
         "Omega<=A", "barycenter-pair-agreement"},
        {},
        8},
       trial_cartan_le_wass},
  };
  return kEntries;
}

const SuiteEntry* find_entry(std::string_view name) {
  for (const auto& e : entries())
    if (e.info.name == name) return &e;
  return nullptr;
}

TrialOutcome run_trial(const SuiteEntry& e, const Rng& root, int index, int dim_lo, int dim_hi,
                       const SuiteOptions& options) {
  Rng rng = root.fork("trial", static_cast<std::uint64_t>(index));
  const int dim = rng.uniform_int(dim_lo, dim_hi);
  Trial trial(e.info, std::move(rng), dim, index, options);
  try {
    e.run(trial);
  } catch (const NumericalFailure& ex) {
    trial.fail_numerically(std::string("dim ") + std::to_string(dim) + ": " + ex.what());
  } catch (const std::exception& ex) {
    trial.fail_numerically(std::string("dim ") + std::to_string(dim) + ": unexpected error: " + ex.what());
  }
  return trial.take();
}

}  // namespace

namespace detail {

void run_trials(int trials, Execution execution, const std::function<void(int)>& body) {
#ifdef MEANLAB_HAVE_OPENMP
  if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) body(i);
    return;
  }
#else
  (void)execution;
#endif
  for (int i = 0; i < trials; ++i) body(i);
}

}  // namespace detail

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> kInfos = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return kInfos;
}

const SuiteInfo* find_suite(std::string_view name) {
  const SuiteEntry* e = find_entry(name);
  return e ? &e->info : nullptr;
}

SuiteReport run_verification_suite(const std::string& suite, const SuiteOptions& options) {
  const SuiteEntry* e = find_entry(suite);
  if (!e) throw UsageError("unknown suite '" + suite + "'");
  options.validate();
  const auto start = std::chrono::steady_clock::now();

  const int lo = std::min(options.dim_lo, e->info.max_dim);
  const int hi = std::min(options.dim_hi, e->info.max_dim);
  const Rng root(options.seed, suite);
  std::vector<TrialOutcome> outcomes(options.trials);
  detail::run_trials(options.trials, options.execution, [&](int i) {
    outcomes[i] = run_trial(*e, root, i, lo, hi, options);
  });

  SuiteReport report = detail::merge_outcomes(e->info, outcomes, options);
  if (hi < options.dim_hi)
    report.notes.push_back("trial dimensions clamped to at most " + std::to_string(e->info.max_dim));
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace detail {

SuiteReport merge_outcomes(const SuiteInfo& info, const std::vector<TrialOutcome>& outcomes,
                           const SuiteOptions& options) {
  SuiteReport r;
  r.suite = info.name;
  r.statement = info.statement;
  r.seed = options.seed;
  r.trials = options.trials;
  r.dim_lo = options.dim_lo;
  r.dim_hi = options.dim_hi;
  r.tolerance = options.tol;
  r.solver_tolerance = options.solver.residual_tol;
  r.library_version = MEANLAB_VERSION;
  for (const auto& p : info.properties) r.properties.push_back(PropertyRecord::named(p));
  for (const auto& p : info.diagnostics) r.properties.push_back(PropertyRecord::named(p, true));

  constexpr std::size_t kMaxNotes = 10;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const TrialOutcome& out = outcomes[i];
    const std::string tag = "trial " + std::to_string(i) + ": ";
    if (out.numerical_failure) {
      ++r.numerical_failures;
      if (r.numerical_failure_notes.size() < kMaxNotes)
        r.numerical_failure_notes.push_back(tag + *out.numerical_failure);
      continue;
    }
    for (std::size_t k = 0; k < out.props.size(); ++k) {
      const PropState& s = out.props[k];
      PropertyRecord& p = r.properties[k];
      if (s.checks == 0) {
        ++p.skipped;
        continue;
      }
      ++p.trials;
      if (s.failed) {
        ++p.failures;
        if (!p.first_failure) p.first_failure = tag + s.failure;
      }
      if (s.has_margin && (!p.worst_margin || s.margin < *p.worst_margin)) {
        p.worst_margin = s.margin;
        p.worst_trial = static_cast<int>(i);
      }
    }
    for (const auto& [name, v] : out.counters) r.metrics[name] += v;
  }
  return r;
}

}  // namespace detail

}  // namespace meanlab
