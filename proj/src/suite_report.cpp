#include "meanlab/suite_report.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace meanlab {

int SuiteReport::property_failures() const {
  int n = 0;
  for (const auto& p : properties)
    if (!p.diagnostic) n += p.failures;
  return n;
}

bool SuiteReport::passed() const {
  if (numerical_failures > 0) return false;
  return search || property_failures() == 0;
}

const PropertyRecord* SuiteReport::find(const std::string& name) const {
  auto it = std::find_if(properties.begin(), properties.end(),
                         [&](const PropertyRecord& p) { return p.name == name; });
  return it == properties.end() ? nullptr : &*it;
}

std::string SuiteReport::to_json(bool include_run_info) const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = kSuiteReportSchema;
  doc["suite"] = suite;
  doc["statement"] = statement;
  doc["mode"] = search ? "search" : "verify";
  doc["library_version"] = library_version;
  doc["seed"] = seed;
  doc["trials"] = trials;
  doc["dims"] = {dim_lo, dim_hi};
  doc["tolerance"] = {{"psd_margin", tolerance.psd_margin},
                      {"rel_scale", tolerance.rel_scale},
                      {"solver_residual", solver_tolerance}};
  ordered_json props = ordered_json::array();
  for (const auto& p : properties) {
    ordered_json r;
    r["name"] = p.name;
    r["diagnostic"] = p.diagnostic;
    r["trials"] = p.trials;
    r["failures"] = p.failures;
    r["skipped"] = p.skipped;
    r["worst_margin"] = p.worst_margin ? ordered_json(*p.worst_margin) : ordered_json(nullptr);
    r["worst_trial"] = p.worst_trial;
    r["first_failure"] = p.first_failure ? ordered_json(*p.first_failure) : ordered_json(nullptr);
    props.push_back(std::move(r));
  }
  doc["properties"] = std::move(props);
  doc["numerical_failures"] = numerical_failures;
  doc["numerical_failure_notes"] = numerical_failure_notes;
  ordered_json m = ordered_json::object();
  for (const auto& [k, v] : metrics) m[k] = v;
  doc["metrics"] = std::move(m);
  doc["artifacts"] = artifacts;
  doc["notes"] = notes;
  doc["passed"] = passed();
  if (include_run_info) doc["run_info"] = {{"wall_seconds", wall_seconds}};
  return doc.dump(2) + "\n";
}

int exit_code(const SuiteReport& report) {
  if (report.numerical_failures > 0) return 3;
  return report.passed() ? 0 : 1;
}

}  // namespace meanlab
