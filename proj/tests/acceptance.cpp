// Acceptance suite: one PASS/FAIL line per criterion; exits 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "meanlab/eigensolver.hpp"
#include "meanlab/matrix_io.hpp"
#include "meanlab/samplers.hpp"
#include "meanlab/suites.hpp"
#include "support.hpp"

using namespace meanlab;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances and budgets.
constexpr double kTheoremTol = 1e-8;
constexpr double kEigResidualTol = 1e-12;
constexpr double kMaxCondition = 1e8;
constexpr double kReplayTol = 1e-10;
constexpr double kRelationChainBudget = 60.0;
constexpr double kLieTrotterBudget = 30.0;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass;
  std::string detail;
};

SuiteOptions options(int trials, int lo, int hi) {
  SuiteOptions o;
  o.seed = kSeed;
  o.trials = trials;
  o.dim_lo = lo;
  o.dim_hi = hi;
  o.tol = {kTheoremTol, true};
  return o;
}

std::string summarize(const SuiteReport& r) {
  std::ostringstream s;
  s << r.suite << ": " << r.trials << " trials, " << r.property_failures() << " property failures, "
    << r.numerical_failures << " numerical failures";
  for (const PropertyRecord& p : r.properties)
    if (!p.diagnostic && p.failures > 0) s << "; " << p.name << " failed " << p.failures;
  return s.str();
}

Outcome suites_pass(const std::vector<std::pair<std::string, SuiteOptions>>& runs) {
  bool pass = true;
  std::string detail;
  for (const auto& [name, opt] : runs) {
    const SuiteReport r = run_verification_suite(name, opt);
    pass = pass && r.passed() && r.numerical_failures == 0;
    if (!detail.empty()) detail += " | ";
    detail += summarize(r);
  }
  return {pass, detail};
}

Outcome timed_suite(const std::string& name, const SuiteOptions& opt, double budget) {
  const SuiteReport r = run_verification_suite(name, opt);
  const bool ok = r.passed() && r.numerical_failures == 0 && r.wall_seconds <= budget;
  char buf[64];
  std::snprintf(buf, sizeof buf, "; %.2f s (budget %.0f s)", r.wall_seconds, budget);
  return {ok, summarize(r) + buf};
}

Outcome eigensolver_accuracy() {
  Rng rng(kSeed, "acceptance-eigensolver");
  double worst_rec = 0, worst_unit = 0, worst_cond = 1;
  for (int i = 0; i < 1000; ++i) {
    const int m = rng.uniform_int(2, 16);
    const double cond = std::exp(rng.uniform(0, std::log(kMaxCondition)));
    RealVector lambda(m);
    for (int k = 0; k < m; ++k) {
      const double mag = k == 0 ? 1.0 : k == 1 ? 1.0 / cond : std::exp(-rng.uniform(0, std::log(cond)));
      lambda(k) = rng.uniform() < 0.5 ? -mag : mag;
    }
    const Matrix u = random_unitary(rng, m);
    const HermitianMatrix h =
        HermitianMatrix::symmetrized(u * lambda.cast<Complex>().asDiagonal() * u.adjoint());
    const EigenDecomposition e = eig_hermitian(h);
    const double scale = test::op_norm(h.matrix());
    worst_rec = std::max(worst_rec, test::op_norm(e.reconstruct() - h.matrix()) / scale);
    worst_unit = std::max(worst_unit, test::op_norm(e.vectors.adjoint() * e.vectors - Matrix::Identity(m, m)));
    worst_cond = std::max(worst_cond, cond);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "1000 matrices, dims 2-16, max condition %.2g; worst reconstruction %.2e, worst unitarity %.2e",
                worst_cond, worst_rec, worst_unit);
  return {worst_rec <= kEigResidualTol && worst_unit <= kEigResidualTol, buf};
}

Outcome determinism() {
  std::vector<std::string> mismatched;
  for (const std::string name : {"relation-chain", "equivalence-7way", "renyi-properties", "cartan-le-wass",
                                 "lie-trotter", "mono-parameters"}) {
    SuiteOptions opt = options(40, 2, 4);
    const std::string first = run_verification_suite(name, opt).to_json(false);
    const std::string again = run_verification_suite(name, opt).to_json(false);
    opt.execution = Execution::Serial;
    const std::string serial = run_verification_suite(name, opt).to_json(false);
    if (first != again || first != serial) mismatched.push_back(name);
  }
  Rng rng(kSeed, "acceptance-io");
  int io_mismatch = 0;
  for (int i = 0; i < 200; ++i) {
    const HermitianMatrix h = random_hermitian(rng, rng.uniform_int(1, 16), rng.uniform(1e-3, 1e3));
    const Matrix back = parse_matrix_file(format_matrix_file({h, std::nullopt})).matrix.matrix();
    if (std::memcmp(back.data(), h.matrix().data(), sizeof(Complex) * back.size()) != 0) ++io_mismatch;
  }
  std::string detail = "6 suites rerun (repeat and serial): " + std::to_string(mismatched.size()) +
                       " differing bodies; 200 matrix files: " + std::to_string(io_mismatch) + " inexact";
  for (const auto& n : mismatched) detail += "; " + n;
  return {mismatched.empty() && io_mismatch == 0, detail};
}

Outcome conjecture() {
  const fs::path dir = fs::temp_directory_path() / "meanlab-acceptance-conjecture";
  fs::remove_all(dir);
  ConjectureOptions opt;
  opt.suite = options(2000, 2, 6);
  opt.dump_dir = dir;
  const SuiteReport r = conjecture_search_le_omega(opt);
  const auto min_margin = r.metrics.find("min_margin");
  if (min_margin == r.metrics.end()) return {false, "no margin reported"};
  double worst_replay = 0;
  for (const std::string& manifest : r.artifacts) {
    const ReplayResult rep = replay_conjecture_manifest(dir / manifest);
    worst_replay = std::max(worst_replay, std::abs(rep.replayed_margin - rep.recorded_margin));
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "2000 trials in %.2f s; min margin %.3e; %d counterexamples; %zu dumped instances "
                "replayed, worst difference %.2e",
                r.wall_seconds, min_margin->second, static_cast<int>(r.metrics.at("counterexamples")),
                r.artifacts.size(), worst_replay);
  return {!r.artifacts.empty() && worst_replay <= kReplayTol && r.numerical_failures == 0, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"relation chain, 2000 trials, dims 2-8, runtime <= 60 s",
       [] { return timed_suite("relation-chain", options(2000, 2, 8), kRelationChainBudget); }},
      {"seven-way equivalence, 500 trials",
       [] { return suites_pass({{"equivalence-7way", options(500, 2, 8)}}); }},
      {"quasi-arithmetic parameter chain, 500 tuples, dims 2-6",
       [] { return suites_pass({{"mono-parameters", options(500, 2, 6)}}); }},
      {"spectral and Wasserstein monotonicity iff, 500 trials",
       [] { return suites_pass({{"mono-sp-wass", options(500, 2, 8)}}); }},
      {"Renyi solver and properties, 500 instances, dims <= 8",
       [] {
         return suites_pass({{"renyi-properties", options(500, 2, 8)}, {"renyi-logdet", options(500, 2, 8)}});
       }},
      {"Renyi-quasi and Renyi-LE, 200 tuples each",
       [] { return suites_pass({{"renyi-quasi", options(200, 2, 8)}, {"renyi-le", options(200, 2, 8)}}); }},
      {"Lie-Trotter, 20 curve families, dims <= 4, runtime <= 30 s",
       [] { return timed_suite("lie-trotter", options(20, 2, 4), kLieTrotterBudget); }},
      {"Cartan, log-Euclidean and Wasserstein, 200 tuples",
       [] { return suites_pass({{"cartan-le-wass", options(200, 2, 8)}}); }},
      {"eigensolver accuracy", eigensolver_accuracy},
      {"determinism of reports and matrix files", determinism},
      {"conjecture harness search and replay", conjecture},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
