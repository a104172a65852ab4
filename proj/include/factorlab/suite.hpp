#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "factorlab/monoid_spec.hpp"

namespace factorlab {

struct Check {
  std::string name;
  std::string claim;  // what the check asserts, in words
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct ScenarioReport {
  std::string id;
  std::string description;
  std::vector<Check> checks;
  bool pass = false;         // every check passes
  double runtime_ms = 0.0;   // wall clock; not part of the JSON report
};

struct SuiteReport {
  std::vector<ScenarioReport> scenarios;
  bool pass = false;
};

struct SuiteOptions {
  Budget budget = kDefaultBudget;
  /// Mutation test: perturbs every monoid the scenarios build (the first
  /// generator or the threshold is doubled) so engine answers go wrong.
  bool inject_fault = false;
};

/// Scenario ids in a fixed order.
const std::vector<std::string>& list_scenarios();

/// Throws Error(unknown_id) listing the valid ids.
ScenarioReport run_scenario(std::string_view id, const SuiteOptions& options = {});

SuiteReport run_all(const SuiteOptions& options = {});

}  // namespace factorlab
