#ifndef REVAUDIT_REPRODUCE_H_
#define REVAUDIT_REPRODUCE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "revaudit/config.h"

namespace revaudit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;

  bool operator==(const CriterionResult&) const = default;
};

struct ReproduceOptions {
  // Replaces the wage window used for the in-window check.
  std::function<labor::OpenInterval(const labor::LaborParams&)> window =
      labor::WageWindow;
  int random_instances = 200;
  std::uint64_t seed = 20240501;
};

// Runs the canonical checks in order, ids 1 through 8.
std::vector<CriterionResult> RunCriteria(const ReproduceOptions& options = {});

Json CriteriaToJson(const std::vector<CriterionResult>& results);

struct ReproduceOutcome {
  std::string output;
  bool all_passed = false;
  std::vector<std::string> failures;
};

// Full reproduce run: criteria 1-8 are evaluated twice and the rendered
// reports compared byte for byte to decide criterion 9.
ReproduceOutcome Reproduce(const ReproduceOptions& options = {});

}  // namespace revaudit

#endif  // REVAUDIT_REPRODUCE_H_
