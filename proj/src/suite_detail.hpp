#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "meanlab/order_relations.hpp"
#include "meanlab/rng.hpp"
#include "meanlab/suites.hpp"

namespace meanlab::detail {

std::string fmt(double x);

/// Per-trial state of one property.
struct PropState {
  int checks = 0;
  bool failed = false;
  bool skipped = false;
  bool has_margin = false;
  double margin = std::numeric_limits<double>::infinity();
  std::string failure;
};

struct TrialOutcome {
  std::vector<PropState> props;
  std::map<std::string, double> counters;
  std::optional<std::string> numerical_failure;
};

/// Context handed to a suite's trial function. Property names must be
/// registered for the suite.
class Trial {
 public:
  Trial(const SuiteInfo& info, Rng rng, int dim, int index, const SuiteOptions& options);

  Rng& rng() { return rng_; }
  int dim() const { return dim_; }
  int index() const { return index_; }
  const ToleranceProfile& tol() const { return options_.tol; }
  const SolverConfig& solver() const { return options_.solver; }

  void check(std::string_view prop, bool ok, double margin, const std::string& witness);
  void verdict(std::string_view prop, const OrderVerdict& v, const std::string& label);
  /// value <= limit, margin limit - value.
  void bound(std::string_view prop, double value, double limit, const std::string& label);
  /// Premise false: counts as a passing check without a margin.
  void vacuous(std::string_view prop);
  /// Not applicable in this trial (unless checked elsewhere in it).
  void skip(std::string_view prop);
  void count(const std::string& name, double v = 1.0);

  void fail_numerically(std::string what) { outcome_.numerical_failure = std::move(what); }
  TrialOutcome take() { return std::move(outcome_); }

 private:
  PropState& state(std::string_view prop);

  const SuiteInfo& info_;
  Rng rng_;
  int dim_;
  int index_;
  const SuiteOptions& options_;
  TrialOutcome outcome_;
};

/// body(i) for i in [0, trials), on the OpenMP pool when requested.
void run_trials(int trials, Execution execution, const std::function<void(int)>& body);

SuiteReport merge_outcomes(const SuiteInfo& info, const std::vector<TrialOutcome>& outcomes,
                           const SuiteOptions& options);

}  // namespace meanlab::detail
