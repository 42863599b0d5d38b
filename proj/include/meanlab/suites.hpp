#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "meanlab/multi_means.hpp"
#include "meanlab/order_relations.hpp"
#include "meanlab/suite_report.hpp"

namespace meanlab {

enum class Execution {
  /// Plain loop over trials: the reference runner.
  Serial,
  /// OpenMP worker pool over trials (falls back to Serial without OpenMP).
  Parallel,
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  int trials = 100;
  int dim_lo = 2;
  int dim_hi = 8;
  /// Theorem margins: 1e-8 scaled by max(1, ||A||, ||B||).
  ToleranceProfile tol{1e-8, true};
  SolverConfig solver{};
  Execution execution = Execution::Parallel;

  void validate() const;
};

struct SuiteInfo {
  std::string name;
  /// The mathematical statement the suite verifies.
  std::string statement;
  std::vector<std::string> properties;
  std::vector<std::string> diagnostics;
  /// Trial dimensions are clamped to this bound.
  int max_dim = 16;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(std::string_view name);

/// Runs `options.trials` independent trials. Trial i draws everything from
/// Rng(seed, suite).fork("trial", i); results are merged in trial order, so
/// the report body does not depend on the execution mode. Unknown suite
/// names throw UsageError.
SuiteReport run_verification_suite(const std::string& suite, const SuiteOptions& options);

struct ConjectureOptions {
  SuiteOptions suite{};
  int n_lo = 2;
  int n_hi = 8;
  /// When set, the minimum-margin trial and every trial below -tolerance
  /// are written there as MatrixFiles plus a manifest.
  std::optional<std::filesystem::path> dump_dir;
};

/// Margin of the open question LE(w; A) near-order Omega(w; A):
/// lambda_min(LE^{-1} # Omega) - 1, with the effective tolerance used to
/// classify it.
struct ConjectureMargin {
  double margin = 0.0;
  double tolerance = 0.0;
};

ConjectureMargin le_omega_margin(const WeightVector& w, const MatrixTuple& a,
                                 const ToleranceProfile& tol, const SolverConfig& solver);

/// Random search for counterexamples to LE near-order Omega.
SuiteReport conjecture_search_le_omega(const ConjectureOptions& options);

struct ReplayResult {
  double recorded_margin = 0.0;
  double replayed_margin = 0.0;
};

/// Recomputes the margin of a dumped trial from its manifest and files.
ReplayResult replay_conjecture_manifest(const std::filesystem::path& manifest);

}  // namespace meanlab
