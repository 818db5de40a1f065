#include "revaudit/random_instances.h"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace revaudit {
namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  int Int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

RandomInstance MakeRandomInstance(std::uint64_t seed,
                                  const RandomInstanceOptions& options) {
  Draw draw(seed);
  const int n = options.num_agents;

  std::vector<std::vector<std::string>> type_labels(n);
  std::vector<std::vector<Rational>> priors(n);
  std::vector<std::vector<std::string>> action_labels(n);
  for (int i = 0; i < n; ++i) {
    const int n_types = draw.Int(1, options.max_types);
    std::vector<int> weights;
    int total = 0;
    for (int t = 0; t < n_types; ++t) {
      type_labels[i].push_back("t" + std::to_string(t));
      weights.push_back(options.uniform_prior ? 1 : draw.Int(1, 4));
      total += weights.back();
    }
    for (int w : weights) priors[i].push_back(Rational(w, total));
    const int n_actions = draw.Int(1, options.max_actions);
    for (int a = 0; a < n_actions; ++a) {
      action_labels[i].push_back("a" + std::to_string(a));
    }
  }
  TypeSpace types(std::move(type_labels), std::move(priors));

  const int n_outcomes = draw.Int(1, options.max_outcomes);
  std::vector<Outcome> outcomes;
  for (int x = 0; x < n_outcomes; ++x) {
    outcomes.push_back({"x" + std::to_string(x), {Rational(x)}});
  }
  OutcomeSet outcome_set(std::move(outcomes));

  Mechanism mechanism = Mechanism::FromRule(
      action_labels, outcome_set,
      [&](const Profile&) { return draw.Int(0, n_outcomes - 1); });

  const int den = options.utility_denominator;
  UtilityTable utilities = UtilityTable::FromRule(
      outcome_set, types,
      [&](int, int, int) { return Rational(draw.Int(0, den), den); });

  CostModel costs = CostModel::Zero(mechanism, types);
  if (!options.zero_costs) {
    std::vector<std::vector<std::vector<Rational>>> strategic(n);
    std::vector<std::vector<std::vector<Rational>>> misreport(n);
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a < mechanism.num_actions(i); ++a) {
        auto& row = strategic[i].emplace_back();
        for (int t = 0; t < types.num_types(i); ++t) {
          row.push_back(Rational(draw.Int(0, den / 2), den));
        }
      }
      for (int t = 0; t < types.num_types(i); ++t) {
        auto& row = misreport[i].emplace_back();
        for (int r = 0; r < types.num_types(i); ++r) {
          row.push_back(r == t ? Rational(0) : Rational(draw.Int(0, den / 2), den));
        }
      }
    }
    costs = CostModel{ActionCosts(std::move(strategic)),
                      MisreportCosts(std::move(misreport))};
  }

  return RandomInstance{std::move(types), std::move(mechanism),
                        std::move(utilities), std::move(costs)};
}

}  // namespace revaudit
