// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sigop {

// One numeric comparison. Bound checks pass when deviation <= tolerance; threshold checks
// (strict inequalities) pass when deviation < 0 and ignore tolerance overrides.
struct Check {
  std::string name;
  double value = 0.0;
  double reference = 0.0;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool threshold = false;
  bool pass = false;
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;
  double budget = 0.0;  // wall-clock limit in seconds
  std::string failure;  // exception text, if the criterion aborted

  bool passed() const;
  double worst_ratio() const;  // max deviation / tolerance over bound checks
};

struct SuiteOptions {
  std::size_t wedge_points = 64;
  std::optional<double> tolerance;  // replaces every bound-check tolerance
  std::vector<int> only;            // empty runs all criteria
  std::uint64_t seed = 20160401;
  bool enforce_budget = true;
};

int criterion_count();
Criterion run_criterion(int id, const SuiteOptions& options = {});
std::vector<Criterion> run_suite(const SuiteOptions& options = {});

std::string suite_report_json(const std::vector<Criterion>& criteria);

}  // namespace sigop
