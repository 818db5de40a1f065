#ifndef REVAUDIT_RANDOM_INSTANCES_H_
#define REVAUDIT_RANDOM_INSTANCES_H_

#include <cstdint>

#include "revaudit/game.h"

namespace revaudit {

struct RandomInstanceOptions {
  int num_agents = 2;
  int max_types = 2;
  int max_actions = 3;
  int max_outcomes = 4;
  // Utilities are k/denominator with k in [0, denominator].
  int utility_denominator = 12;
  bool uniform_prior = false;
  bool zero_costs = true;
};

struct RandomInstance {
  TypeSpace types;
  Mechanism mechanism;
  UtilityTable utilities;
  CostModel costs;
};

// Small random Bayesian mechanism. Uses raw std::mt19937_64 output only, so
// a seed yields the same instance on every standard library.
RandomInstance MakeRandomInstance(std::uint64_t seed,
                                  const RandomInstanceOptions& options = {});

}  // namespace revaudit

#endif  // REVAUDIT_RANDOM_INSTANCES_H_
