#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "meanlab/errors.hpp"
#include "meanlab/matrix_io.hpp"
#include "meanlab/pair_means.hpp"
#include "meanlab/samplers.hpp"
#include "meanlab/suites.hpp"
#include "suite_detail.hpp"

namespace meanlab {
namespace {

constexpr const char* kSuiteName = "conjecture-le-omega";
constexpr const char* kPropertyName = "LE<=Omega";
constexpr const char* kManifestSchema = "meanlab.conjecture-instance/1";

struct Instance {
  int dim = 0;
  WeightVector w;
  MatrixTuple a;
};

Instance draw_instance(const Rng& root, int trial, const ConjectureOptions& opt) {
  Rng rng = root.fork("trial", static_cast<std::uint64_t>(trial));
  const int dim = rng.uniform_int(opt.suite.dim_lo, opt.suite.dim_hi);
  const int n = rng.uniform_int(opt.n_lo, opt.n_hi);
  std::vector<HpdMatrix> items;
  for (int j = 0; j < n; ++j) items.push_back(random_hpd(rng, dim, 0.2, 5.0));
  WeightVector w = random_weights(rng, n);
  return {dim, std::move(w), MatrixTuple(std::move(items))};
}

struct Outcome {
  std::optional<ConjectureMargin> margin;
  std::optional<std::string> solver_failure;
  std::optional<std::string> numerical_failure;
};

std::string stem(std::uint64_t seed, int trial) {
  return "le-omega-s" + std::to_string(seed) + "-t" + std::to_string(trial);
}

std::string dump_instance(const std::filesystem::path& dir, const ConjectureOptions& opt, int trial,
                          const Instance& inst, const ConjectureMargin& m) {
  const std::string base = stem(opt.suite.seed, trial);
  nlohmann::ordered_json files = nlohmann::ordered_json::array();
  for (int j = 0; j < inst.a.size(); ++j) {
    const std::string name = base + "-A" + std::to_string(j) + ".json";
    write_matrix_file(dir / name, {inst.a[j].hermitian(), base + " A_" + std::to_string(j)});
    files.push_back(name);
  }
  nlohmann::ordered_json doc;
  doc["schema"] = kManifestSchema;
  doc["seed"] = opt.suite.seed;
  doc["trial"] = trial;
  doc["dim"] = inst.dim;
  doc["weights"] = std::vector<double>(inst.w.values().begin(), inst.w.values().end());
  doc["files"] = std::move(files);
  doc["margin"] = m.margin;
  doc["tolerance"] = m.tolerance;
  doc["psd_margin"] = opt.suite.tol.psd_margin;
  doc["rel_scale"] = opt.suite.tol.rel_scale;
  doc["solver_residual_tol"] = opt.suite.solver.residual_tol;
  doc["solver_max_iter"] = opt.suite.solver.max_iter;
  const std::string manifest = base + "-manifest.json";
  std::ofstream out(dir / manifest, std::ios::binary);
  if (!out) throw UsageError("cannot open " + (dir / manifest).string() + " for writing");
  out << doc.dump(2) << "\n";
  return manifest;
}

}  // namespace

ConjectureMargin le_omega_margin(const WeightVector& w, const MatrixTuple& a,
                                 const ToleranceProfile& tol, const SolverConfig& solver) {
  const HpdMatrix le = log_euclidean(w, a);
  const HpdMatrix omega = wasserstein_barycenter(w, a, solver).value;
  return {inverse_geometric(le, omega).min_eigenvalue() - 1.0, tol.effective(le, omega)};
}

SuiteReport conjecture_search_le_omega(const ConjectureOptions& opt) {
  opt.suite.validate();
  if (opt.n_lo < 1 || opt.n_hi < opt.n_lo || opt.n_hi > 64)
    throw PreconditionError("tuple sizes must satisfy 1 <= lo <= hi <= 64");
  const auto start = std::chrono::steady_clock::now();
  const Rng root(opt.suite.seed, kSuiteName);

  std::vector<Outcome> outcomes(opt.suite.trials);
  detail::run_trials(opt.suite.trials, opt.suite.execution, [&](int i) {
    Outcome& out = outcomes[i];
    try {
      const Instance inst = draw_instance(root, i, opt);
      out.margin = le_omega_margin(inst.w, inst.a, opt.suite.tol, opt.suite.solver);
    } catch (const SolverFailure& e) {
      out.solver_failure = e.what();
    } catch (const std::exception& e) {
      out.numerical_failure = e.what();
    }
  });

  SuiteReport r;
  r.suite = kSuiteName;
  r.statement = "Open question: LE(w; A) <= Omega(w; A) in the near order, i.e. "
                "lambda_min(LE^-1 # Omega) >= 1";
  r.search = true;
  r.seed = opt.suite.seed;
  r.trials = opt.suite.trials;
  r.dim_lo = opt.suite.dim_lo;
  r.dim_hi = opt.suite.dim_hi;
  r.tolerance = opt.suite.tol;
  r.solver_tolerance = opt.suite.solver.residual_tol;
  r.library_version = MEANLAB_VERSION;
  r.properties.push_back(PropertyRecord::named(kPropertyName));
  PropertyRecord& p = r.properties.back();

  int solver_failures = 0;
  std::vector<int> negatives;
  for (int i = 0; i < opt.suite.trials; ++i) {
    const Outcome& out = outcomes[i];
    const std::string tag = "trial " + std::to_string(i) + ": ";
    if (out.numerical_failure) {
      ++r.numerical_failures;
      if (r.numerical_failure_notes.size() < 10) r.numerical_failure_notes.push_back(tag + *out.numerical_failure);
      continue;
    }
    if (out.solver_failure) {
      ++solver_failures;
      ++p.skipped;
      if (r.notes.size() < 10) r.notes.push_back(tag + "barycenter solver failed: " + *out.solver_failure);
      continue;
    }
    const ConjectureMargin& m = *out.margin;
    ++p.trials;
    if (m.margin < -m.tolerance) {
      ++p.failures;
      negatives.push_back(i);
      if (!p.first_failure)
        p.first_failure = tag + "lambda_min(LE^-1 # Omega) - 1 = " + detail::fmt(m.margin);
    }
    if (!p.worst_margin || m.margin < *p.worst_margin) {
      p.worst_margin = m.margin;
      p.worst_trial = i;
    }
  }
  r.metrics["counterexamples"] = p.failures;
  r.metrics["solver_failures"] = solver_failures;
  r.metrics["evaluated"] = p.trials;
  if (p.worst_margin) {
    r.metrics["min_margin"] = *p.worst_margin;
    r.metrics["min_margin_trial"] = p.worst_trial;
  }

  if (opt.dump_dir && p.worst_margin) {
    std::filesystem::create_directories(*opt.dump_dir);
    std::set<int> dump(negatives.begin(), negatives.end());
    dump.insert(p.worst_trial);
    for (int i : dump)
      r.artifacts.push_back(
          dump_instance(*opt.dump_dir, opt, i, draw_instance(root, i, opt), *outcomes[i].margin));
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ReplayResult replay_conjecture_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest, std::ios::binary);
  if (!in) throw UsageError("cannot open " + manifest.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
    if (doc.at("schema").get<std::string>() != kManifestSchema)
      throw UsageError(manifest.string() + ": unexpected schema");
    std::vector<HpdMatrix> items;
    for (const auto& f : doc.at("files")) items.push_back(read_hpd_file(manifest.parent_path() / f.get<std::string>()));
    const WeightVector w(doc.at("weights").get<std::vector<double>>());
    const ToleranceProfile tol{doc.at("psd_margin").get<double>(), doc.at("rel_scale").get<bool>()};
    const SolverConfig solver{doc.at("solver_residual_tol").get<double>(), doc.at("solver_max_iter").get<int>()};
    const ConjectureMargin m = le_omega_margin(w, MatrixTuple(std::move(items)), tol, solver);
    return {doc.at("margin").get<double>(), m.margin};
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(manifest.string() + ": malformed manifest: " + e.what());
  } catch (const PreconditionError& e) {
    throw UsageError(manifest.string() + ": " + e.what());
  }
}

}  // namespace meanlab
