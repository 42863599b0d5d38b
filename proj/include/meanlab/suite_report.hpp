#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "meanlab/order_relations.hpp"

namespace meanlab {

inline constexpr const char* kSuiteReportSchema = "meanlab.suite-report/1";

/// Aggregate of one property over all trials of a run. A trial fails the
/// property if any of its checks fails; the margin is the smallest signed
/// slack seen (negative beyond tolerance means a failure).
struct PropertyRecord {
  std::string name;
  /// Diagnostics are recorded like properties but never fail the run.
  bool diagnostic = false;
  int trials = 0;
  int failures = 0;
  /// Trials where the property was not applicable.
  int skipped = 0;
  std::optional<double> worst_margin;
  int worst_trial = -1;
  /// "trial N: <witness>" for the first failing trial.
  std::optional<std::string> first_failure;

  static PropertyRecord named(std::string name, bool diagnostic = false) {
    PropertyRecord r;
    r.name = std::move(name);
    r.diagnostic = diagnostic;
    return r;
  }
};

struct SuiteReport {
  std::string suite;
  std::string statement;
  /// Search runs (the open-question harness) report outcomes as data.
  bool search = false;
  std::uint64_t seed = 0;
  int trials = 0;
  int dim_lo = 0;
  int dim_hi = 0;
  ToleranceProfile tolerance;
  double solver_tolerance = 0.0;
  std::string library_version;
  std::vector<PropertyRecord> properties;
  int numerical_failures = 0;
  /// First few numerical-failure messages, "trial N: what".
  std::vector<std::string> numerical_failure_notes;
  std::map<std::string, double> metrics;
  std::vector<std::string> artifacts;
  std::vector<std::string> notes;
  double wall_seconds = 0.0;

  int property_failures() const;
  /// No failing property and no numerical failure (search runs only need
  /// the latter).
  bool passed() const;
  const PropertyRecord* find(const std::string& name) const;

  /// Deterministic body (no wall clock). With run_info the document also
  /// carries a trailing "run_info" object.
  std::string to_json(bool include_run_info = false) const;
};

/// CLI exit status for a finished run: 3 numerical failure, 1 property
/// failure, 0 otherwise.
int exit_code(const SuiteReport& report);

}  // namespace meanlab
