#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "meanlab/asymptotics.hpp"
#include "meanlab/errors.hpp"
#include "meanlab/matrix_io.hpp"
#include "meanlab/multi_means.hpp"
#include "meanlab/order_relations.hpp"
#include "meanlab/pair_means.hpp"
#include "meanlab/rng.hpp"
#include "meanlab/samplers.hpp"
#include "meanlab/suites.hpp"

namespace meanlab::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// "lo..hi" or a single value.
IntRange parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    IntRange r{std::stoi(a, &used), 0};
    if (used != a.size()) throw std::invalid_argument(text);
    r.hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (r.hi < r.lo) throw std::invalid_argument(text);
    return r;
  } catch (const std::logic_error&) {
    throw UsageError(flag + ": expected lo..hi, got '" + text + "'");
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw UsageError("failed writing " + path);
}

ordered_json verdict_json(const OrderVerdict& v) {
  return {{"holds", v.holds},
          {"margin", v.margin},
          {"tolerance", v.tolerance},
          {"witness", v.witness},
          {"index", v.index}};
}

MultiMean parse_multi_mean(const std::string& kind, double p, double t, double z,
                           const SolverConfig& solver) {
  MultiMean m;
  m.solver = solver;
  if (kind == "arithmetic") m.kind = MultiMean::Kind::Arithmetic;
  else if (kind == "harmonic") m.kind = MultiMean::Kind::Harmonic;
  else if (kind == "quasi") m.kind = MultiMean::Kind::Quasi;
  else if (kind == "log-euclidean") m.kind = MultiMean::Kind::LogEuclidean;
  else if (kind == "karcher") m.kind = MultiMean::Kind::Karcher;
  else if (kind == "barycenter") m.kind = MultiMean::Kind::Barycenter;
  else if (kind == "renyi") m.kind = MultiMean::Kind::Renyi;
  else throw UsageError("unknown mean kind '" + kind + "'");
  m.p = p;
  m.t = t;
  m.z = z;
  return m;
}

MatrixTuple read_tuple(const std::vector<std::string>& files) {
  std::vector<HpdMatrix> items;
  for (const auto& f : files) items.push_back(read_hpd_file(f));
  for (const auto& m : items)
    if (m.dim() != items.front().dim())
      throw UsageError("dimension mismatch: " + std::to_string(items.front().dim()) + " vs " +
                       std::to_string(m.dim()));
  return MatrixTuple(std::move(items));
}

WeightVector make_weights(const std::vector<double>& w, int n) {
  if (w.empty()) return WeightVector::uniform(n);
  if (static_cast<int>(w.size()) != n)
    throw UsageError("--weights has " + std::to_string(w.size()) + " entries for " +
                     std::to_string(n) + " matrices");
  return WeightVector(w);
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------------------

struct MeanArgs {
  std::string kind;
  std::optional<double> t, z, p;
  std::vector<double> weights;
  std::vector<std::string> files;
  std::string output;
  double solver_tol = 1e-12;
};

int cmd_mean(const MeanArgs& a, std::ostream& out) {
  const MatrixTuple tup = read_tuple(a.files);
  const SolverConfig solver{a.solver_tol, 500};
  std::optional<HermitianMatrix> result;
  std::string label = a.kind;
  const bool pair_kind = a.kind == "geometric" || a.kind == "spectral" || a.kind == "wasserstein" ||
                         a.kind == "fidelity" || a.kind == "weighted-arithmetic";
  if (pair_kind) {
    if (tup.size() != 2) throw UsageError(a.kind + " takes exactly two matrix files");
    if (!a.weights.empty()) throw UsageError(a.kind + " is parameterized by --t, not --weights");
    const double t = a.t.value_or(0.5);
    if (a.kind != "fidelity") label += " t=" + fmt(t);
    if (a.kind == "geometric") result = metric_geometric(tup[0], tup[1], t).hermitian();
    else if (a.kind == "spectral") result = spectral_geometric(tup[0], tup[1], t).hermitian();
    else if (a.kind == "wasserstein") result = wasserstein_mean(tup[0], tup[1], t).hermitian();
    else if (a.kind == "fidelity") result = fidelity(tup[0], tup[1]).hermitian();
    else result = weighted_arithmetic(tup[0], tup[1], t);
  } else {
    if (a.kind == "quasi" && !a.p) throw UsageError("quasi needs --p");
    if (a.kind == "renyi" && (!a.t || !a.z)) throw UsageError("renyi needs --t and --z");
    const MultiMean m =
        parse_multi_mean(a.kind, a.p.value_or(1.0), a.t.value_or(0.0), a.z.value_or(1.0), solver);
    label = m.name();
    result = m(make_weights(a.weights, tup.size()), tup).hermitian();
  }
  write_text(a.output, format_matrix_file({*result, label}), out);
  return 0;
}

struct OrderArgs {
  std::string a, b;
  double tol = 1e-8;
  std::string output;
};

int cmd_order(const OrderArgs& o, std::ostream& out) {
  const HpdMatrix a = read_hpd_file(o.a), b = read_hpd_file(o.b);
  if (a.dim() != b.dim())
    throw UsageError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  const ToleranceProfile tol{o.tol, true};
  const RelationProfile prof = compute_relation_profile(a, b, tol);
  ordered_json doc;
  doc["schema"] = "meanlab.relation-profile/1";
  doc["a"] = o.a;
  doc["b"] = o.b;
  doc["tolerance"] = {{"psd_margin", tol.psd_margin}, {"rel_scale", tol.rel_scale}};
  doc["relations"] = {{"loewner", verdict_json(prof.loewner)},
                      {"chaotic", verdict_json(prof.chaotic)},
                      {"near", verdict_json(prof.near)},
                      {"eigen_entrywise", verdict_json(prof.eigen_entrywise)},
                      {"weak_log_majorization", verdict_json(prof.weak_log_major)}};
  const auto violations = prof.chain_violations();
  doc["chain_violations"] = violations;
  write_text(o.output, doc.dump(2) + "\n", out);
  return violations.empty() ? 0 : 3;
}

struct VerifyArgs {
  std::string suite;
  int trials = 100;
  std::string dims = "2..8";
  std::uint64_t seed = 0;
  double tol = 1e-8;
  double solver_tol = 1e-12;
  int max_iter = 500;
  bool serial = false;
  bool no_run_info = false;
  std::string output;
};

void summarize(const SuiteReport& r, std::ostream& err) {
  err << r.suite << ": " << (r.passed() ? "passed" : "FAILED") << " (" << r.trials << " trials";
  if (r.numerical_failures) err << ", " << r.numerical_failures << " numerical failures";
  err << ")\n";
  for (const auto& p : r.properties) {
    err << "  " << (p.failures ? "FAIL" : "ok  ") << " " << p.name;
    if (p.diagnostic) err << " [diagnostic]";
    err << ": " << p.trials - p.failures << "/" << p.trials;
    if (p.skipped) err << " (" << p.skipped << " skipped)";
    if (p.worst_margin) err << ", worst margin " << *p.worst_margin;
    err << "\n";
  }
  for (const auto& n : r.numerical_failure_notes) err << "  numerical failure " << n << "\n";
}

int cmd_verify(const VerifyArgs& v, std::ostream& out, std::ostream& err) {
  if (!find_suite(v.suite)) throw UsageError("unknown suite '" + v.suite + "'");
  SuiteOptions opt;
  opt.seed = v.seed;
  opt.trials = v.trials;
  const IntRange d = parse_range(v.dims, "--dims");
  opt.dim_lo = d.lo;
  opt.dim_hi = d.hi;
  opt.tol = {v.tol, true};
  opt.solver = {v.solver_tol, v.max_iter};
  opt.execution = v.serial ? Execution::Serial : Execution::Parallel;
  const SuiteReport r = run_verification_suite(v.suite, opt);
  write_text(v.output, r.to_json(!v.no_run_info), out);
  summarize(r, err);
  return exit_code(r);
}

struct LimitsArgs {
  std::string study;
  std::uint64_t seed = 0;
  int dim = 3;
  int n = 3;
  std::vector<double> grid;
  std::vector<double> weights;
  std::string mean = "arithmetic";
  std::optional<double> p;
  double t = 0.5, z = 0.75;
  std::string hypothesis = "auto";
  double tol = 1e-8;
  double solver_tol = 1e-12;
  std::vector<std::string> files;
  std::string output;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string limits_csv(const LimitStudyReport& r) {
  std::ostringstream out;
  out << "study,index,param,error,estimated_order,check,role,holds,margin,tolerance\n";
  const std::string order = r.estimated_order ? fmt(*r.estimated_order) : "";
  auto row = [&](const GridVerdict& v, const char* role) {
    out << r.study << ',' << v.grid_index << ',' << fmt(r.grid[v.grid_index]) << ','
        << fmt(r.errors[v.grid_index]) << ',' << order << ',' << csv_field(v.check) << ',' << role
        << ',' << (v.verdict.holds ? "true" : "false") << ',' << fmt(v.verdict.margin) << ','
        << fmt(v.verdict.tolerance) << '\n';
  };
  for (const auto& v : r.verdicts) row(v, "verdict");
  for (const auto& v : r.diagnostics) row(v, "diagnostic");
  return out.str();
}

int cmd_limits(const LimitsArgs& l, std::ostream& out, std::ostream& err) {
  const ToleranceProfile tol{l.tol, true};
  const SolverConfig solver{l.solver_tol, 500};
  Rng rng = Rng(l.seed, "limits").fork(l.study);
  auto sampled_tuple = [&](double lo, double hi) {
    std::vector<HpdMatrix> items;
    for (int j = 0; j < l.n; ++j) items.push_back(random_hpd(rng, l.dim, lo, hi));
    return MatrixTuple(std::move(items));
  };
  if (l.files.empty() && (l.dim < 1 || l.dim > 16 || l.n < 1 || l.n > 64))
    throw UsageError("--dim must be in [1, 16] and --n in [1, 64]");

  LimitStudyReport r;
  if (l.study == "lie-trotter") {
    std::vector<Curve> curves;
    if (l.files.empty()) {
      for (int j = 0; j < l.n; ++j)
        curves.emplace_back(random_hermitian(rng, l.dim, rng.uniform(0.25, 1.0)));
    } else {
      for (const auto& f : l.files) curves.emplace_back(read_matrix_file(f).matrix);
      for (const auto& c : curves)
        if (c.generator().dim() != curves.front().generator().dim())
          throw UsageError("dimension mismatch between generator files");
    }
    const int n = static_cast<int>(curves.size());
    const WeightVector w = l.weights.empty() && l.files.empty() ? random_weights(rng, n)
                                                                 : make_weights(l.weights, n);
    const MultiMean m = parse_multi_mean(l.mean, l.p.value_or(1.0), l.t, l.z, solver);
    if (m.kind == MultiMean::Kind::Quasi && !l.p) throw UsageError("--mean quasi needs --p");
    const std::vector<double> grid =
        l.grid.empty() ? std::vector<double>{0.02, 0.01, 0.005, 0.0025} : l.grid;
    r = lie_trotter_limit_study(m, w, curves, grid, tol);
  } else if (l.study == "renyi-zero" || l.study == "qp-le") {
    RenyiHypothesis hyp = RenyiHypothesis::None;
    if (l.hypothesis == "below") hyp = RenyiHypothesis::BelowIdentity;
    else if (l.hypothesis == "above") hyp = RenyiHypothesis::AboveIdentity;
    else if (l.hypothesis != "none" && l.hypothesis != "auto")
      throw UsageError("--hypothesis must be below, above, none or auto");
    MatrixTuple a = l.files.empty()
                        ? (hyp == RenyiHypothesis::BelowIdentity   ? sampled_tuple(0.2, 0.98)
                           : hyp == RenyiHypothesis::AboveIdentity ? sampled_tuple(1.02, 5.0)
                                                                   : sampled_tuple(0.2, 5.0))
                        : read_tuple(l.files);
    const WeightVector w = l.weights.empty() && l.files.empty() ? random_weights(rng, a.size())
                                                                 : make_weights(l.weights, a.size());
    if (l.study == "renyi-zero") {
      if (l.hypothesis == "auto") hyp = detect_renyi_hypothesis(a);
      const std::vector<double> grid = l.grid.empty() ? std::vector<double>{0.2, 0.1, 0.05} : l.grid;
      r = renyi_zero_limit_study(l.t, l.z, w, a, grid, hyp, tol, solver);
    } else {
      const std::vector<double> grid =
          l.grid.empty() ? std::vector<double>{0.5, 0.25, 0.125, 0.0625} : l.grid;
      r = qp_le_convergence_study(w, a, grid, tol);
    }
  } else {
    throw UsageError("unknown study '" + l.study + "' (lie-trotter, renyi-zero, qp-le)");
  }
  write_text(l.output, limits_csv(r), out);
  err << r.study << ": terminal error " << r.errors.back();
  if (r.estimated_order) err << ", estimated order " << *r.estimated_order;
  err << (r.all_verdicts_hold() ? ", all verdicts hold\n" : ", some verdicts FAIL\n");
  return r.all_verdicts_hold() ? 0 : 1;
}

struct ConjectureArgs {
  int trials = 2000;
  std::uint64_t seed = 0;
  std::string dims = "2..6";
  std::string n = "2..8";
  double tol = 1e-8;
  double solver_tol = 1e-12;
  int max_iter = 500;
  bool serial = false;
  bool no_run_info = false;
  std::string dump_dir;
  std::string replay;
  std::string output;
};

constexpr double kReplayTolerance = 1e-10;

int cmd_conjecture(const ConjectureArgs& c, std::ostream& out, std::ostream& err) {
  if (!c.replay.empty()) {
    const ReplayResult rr = replay_conjecture_manifest(c.replay);
    const double diff = std::abs(rr.replayed_margin - rr.recorded_margin);
    ordered_json doc = {{"manifest", c.replay},
                        {"recorded_margin", rr.recorded_margin},
                        {"replayed_margin", rr.replayed_margin},
                        {"difference", diff},
                        {"reproduced", diff <= kReplayTolerance}};
    write_text(c.output, doc.dump(2) + "\n", out);
    return diff <= kReplayTolerance ? 0 : 1;
  }
  ConjectureOptions opt;
  opt.suite.seed = c.seed;
  opt.suite.trials = c.trials;
  const IntRange d = parse_range(c.dims, "--dims");
  opt.suite.dim_lo = d.lo;
  opt.suite.dim_hi = d.hi;
  const IntRange n = parse_range(c.n, "--n");
  opt.n_lo = n.lo;
  opt.n_hi = n.hi;
  opt.suite.tol = {c.tol, true};
  opt.suite.solver = {c.solver_tol, c.max_iter};
  opt.suite.execution = c.serial ? Execution::Serial : Execution::Parallel;
  if (!c.dump_dir.empty()) opt.dump_dir = c.dump_dir;
  const SuiteReport r = conjecture_search_le_omega(opt);
  write_text(c.output, r.to_json(!c.no_run_info), out);
  summarize(r, err);
  return exit_code(r);
}

struct SampleArgs {
  std::string config;
  std::string kind = "hpd";
  std::optional<std::uint64_t> seed;
  std::optional<int> dim, count;
  std::optional<double> lo, hi;
  std::string prefix = "sample";
};

SamplerSpec load_spec(const SampleArgs& s) {
  SamplerSpec spec;
  if (!s.config.empty()) {
    std::ifstream in(s.config, std::ios::binary);
    if (!in) throw UsageError("cannot open " + s.config);
    try {
      const nlohmann::json doc = nlohmann::json::parse(in);
      spec.seed = doc.value("seed", spec.seed);
      spec.dim = doc.value("dim", spec.dim);
      spec.lambda_lo = doc.value("lambda_lo", spec.lambda_lo);
      spec.lambda_hi = doc.value("lambda_hi", spec.lambda_hi);
      spec.count = doc.value("count", spec.count);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(s.config + ": " + e.what());
    }
  }
  if (s.seed) spec.seed = *s.seed;
  if (s.dim) spec.dim = *s.dim;
  if (s.count) spec.count = *s.count;
  if (s.lo) spec.lambda_lo = *s.lo;
  if (s.hi) spec.lambda_hi = *s.hi;
  spec.validate();
  return spec;
}

int cmd_sample(const SampleArgs& s, std::ostream& out) {
  const SamplerSpec spec = load_spec(s);
  std::vector<HpdMatrix> items;
  if (s.kind == "hpd") {
    items.push_back(random_hpd(spec));
  } else if (s.kind == "tuple" || s.kind == "commuting") {
    const MatrixTuple t = s.kind == "tuple" ? random_tuple(spec) : random_commuting_family(spec, spec.count);
    items.assign(t.begin(), t.end());
  } else if (s.kind == "near") {
    NearOrderedPair p = random_near_ordered_pair(spec);
    items = {p.a, p.b};
  } else if (s.kind == "loewner" || s.kind == "chaotic") {
    SampledPair p = s.kind == "loewner" ? random_loewner_pair(spec) : random_chaotic_pair(spec);
    items = {p.a, p.b};
  } else {
    throw UsageError("unknown sampler '" + s.kind + "' (hpd, tuple, near, loewner, chaotic, commuting)");
  }
  for (std::size_t j = 0; j < items.size(); ++j) {
    const std::string path = s.prefix + "-" + std::to_string(j) + ".json";
    write_matrix_file(path, {items[j].hermitian(), s.kind + " seed=" + std::to_string(spec.seed)});
    out << path << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order relations and means of positive definite matrices", "meanlab"};
  app.set_version_flag("--version", std::string(MEANLAB_VERSION));
  app.require_subcommand(1);

  MeanArgs mean;
  auto* m = app.add_subcommand("mean", "Compute a mean of matrix files");
  m->add_option("--kind", mean.kind,
                "geometric|spectral|wasserstein|fidelity|weighted-arithmetic|arithmetic|harmonic|"
                "quasi|log-euclidean|karcher|barycenter|renyi")
      ->required();
  m->add_option("--t", mean.t, "Pair-mean parameter, or Renyi t");
  m->add_option("--z", mean.z, "Renyi z");
  m->add_option("--p", mean.p, "Quasi-arithmetic exponent");
  m->add_option("--weights", mean.weights, "Comma-separated weights")->delimiter(',')->allow_extra_args(false);
  m->add_option("--solver-tol", mean.solver_tol, "Fixed-point residual tolerance");
  m->add_option("files", mean.files, "Matrix files")->required();
  m->add_option("-o,--output", mean.output, "Output matrix file (default stdout)");

  OrderArgs order;
  auto* o = app.add_subcommand("order", "Profile the order relations between two matrices");
  o->add_option("A", order.a)->required();
  o->add_option("B", order.b)->required();
  o->add_option("--tol", order.tol, "Relative PSD margin");
  o->add_option("-o,--output", order.output, "Report file (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", verify.suite)->required();
  v->add_option("--trials", verify.trials);
  v->add_option("--dims", verify.dims, "lo..hi");
  v->add_option("--seed", verify.seed);
  v->add_option("--tol", verify.tol, "Relative PSD margin for theorem checks");
  v->add_option("--solver-tol", verify.solver_tol, "Fixed-point residual tolerance");
  v->add_option("--max-iter", verify.max_iter);
  v->add_flag("--serial", verify.serial, "Use the serial reference runner");
  v->add_flag("--no-run-info", verify.no_run_info, "Omit wall-clock data from the report");
  v->add_option("-o,--output", verify.output, "Report file (default stdout)");

  LimitsArgs limits;
  auto* l = app.add_subcommand("limits", "Run an asymptotic study and write CSV");
  l->add_option("--study", limits.study, "lie-trotter|renyi-zero|qp-le")->required();
  l->add_option("--seed", limits.seed);
  l->add_option("--dim", limits.dim);
  l->add_option("--n", limits.n, "Tuple size when sampling");
  l->add_option("--grid", limits.grid, "Comma-separated decreasing grid")->delimiter(',')->allow_extra_args(false);
  l->add_option("--weights", limits.weights)->delimiter(',')->allow_extra_args(false);
  l->add_option("--mean", limits.mean, "Mean for lie-trotter");
  l->add_option("--p", limits.p);
  l->add_option("--t", limits.t);
  l->add_option("--z", limits.z);
  l->add_option("--hypothesis", limits.hypothesis, "below|above|none|auto (renyi-zero)");
  l->add_option("--tol", limits.tol);
  l->add_option("--solver-tol", limits.solver_tol);
  l->add_option("files", limits.files, "Generators (lie-trotter) or tuple files");
  l->add_option("-o,--output", limits.output, "CSV file (default stdout)");

  ConjectureArgs conj;
  auto* c = app.add_subcommand("conjecture", "Search for LE <= Omega counterexamples");
  c->add_option("--trials", conj.trials);
  c->add_option("--seed", conj.seed);
  c->add_option("--dims", conj.dims, "lo..hi");
  c->add_option("--n", conj.n, "Tuple sizes lo..hi");
  c->add_option("--tol", conj.tol);
  c->add_option("--solver-tol", conj.solver_tol);
  c->add_option("--max-iter", conj.max_iter);
  c->add_flag("--serial", conj.serial);
  c->add_flag("--no-run-info", conj.no_run_info);
  c->add_option("--dump-dir", conj.dump_dir, "Directory for instance dumps");
  c->add_option("--replay", conj.replay, "Recompute the margin of a dumped manifest");
  c->add_option("-o,--output", conj.output, "Report file (default stdout)");

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "Draw matrices from a sampler spec");
  s->add_option("--config", sample.config, "JSON sampler spec {seed, dim, lambda_lo, lambda_hi, count}");
  s->add_option("--kind", sample.kind, "hpd|tuple|near|loewner|chaotic|commuting");
  s->add_option("--seed", sample.seed);
  s->add_option("--dim", sample.dim);
  s->add_option("--count", sample.count);
  s->add_option("--lo", sample.lo);
  s->add_option("--hi", sample.hi);
  s->add_option("--prefix", sample.prefix, "Output files are <prefix>-<j>.json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*m) return cmd_mean(mean, out);
    if (*o) return cmd_order(order, out);
    if (*v) return cmd_verify(verify, out, err);
    if (*l) return cmd_limits(limits, out, err);
    if (*c) return cmd_conjecture(conj, out, err);
    if (*s) return cmd_sample(sample, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace meanlab::cli
