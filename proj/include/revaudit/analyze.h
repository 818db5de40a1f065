#ifndef REVAUDIT_ANALYZE_H_
#define REVAUDIT_ANALYZE_H_

#include <cstddef>
#include <optional>

#include "revaudit/config.h"

namespace revaudit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitViolation = 2;

struct AnalyzeOptions {
  // Overrides P(theta_H) for both agents of a labor scenario.
  std::optional<Rational> prior_high;
  std::size_t max_profiles = kDefaultProfileCap;
};

struct AnalyzeResult {
  Json report;
  bool violation = false;
  std::vector<std::string> warnings;

  int exit_code() const { return violation ? kExitViolation : kExitOk; }
};

AnalyzeResult RunScenario(const ScenarioConfig& config,
                          const AnalyzeOptions& options = {});

}  // namespace revaudit

#endif  // REVAUDIT_ANALYZE_H_
