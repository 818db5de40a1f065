#include "revaudit/equilibrium.h"

#include <limits>
#include <utility>

namespace revaudit {

const char* ToString(EquilibriumMode mode) {
  return mode == EquilibriumMode::kProfitBased ? "profit" : "utility";
}

Profile StrategyProfile::ActionsAt(const Profile& types) const {
  if (types.size() != strategies.size()) {
    throw DomainError("type profile size differs from strategy profile size");
  }
  Profile actions;
  actions.reserve(types.size());
  for (std::size_t i = 0; i < types.size(); ++i) {
    const auto& choice = strategies[i].choice;
    if (types[i] < 0 || types[i] >= static_cast<int>(choice.size())) {
      throw DomainError("type index out of range for strategy");
    }
    actions.push_back(choice[types[i]]);
  }
  return actions;
}

BayesianGame::BayesianGame(Mechanism mechanism, TypeSpace types,
                           UtilityTable utilities, ActionCosts costs)
    : mechanism_(std::move(mechanism)),
      types_(std::move(types)),
      utilities_(std::move(utilities)),
      costs_(std::move(costs)) {
  if (mechanism_.num_agents() != types_.num_agents()) {
    throw DomainError("mechanism and type space disagree on the agent count");
  }
  utilities_.CheckShape(mechanism_.outcomes(), types_);
  costs_.CheckShape(mechanism_, types_);
}

BayesianGame::BayesianGame(Mechanism mechanism, TypeSpace types,
                           UtilityTable utilities, const CostModel& costs)
    : BayesianGame(std::move(mechanism), std::move(types), std::move(utilities),
                   costs.strategic) {}

void BayesianGame::CheckProfile(const StrategyProfile& profile) const {
  if (static_cast<int>(profile.strategies.size()) != num_agents()) {
    throw DomainError("strategy profile needs exactly one strategy per agent");
  }
  for (int i = 0; i < num_agents(); ++i) {
    const PureStrategy& s = profile.strategies[i];
    if (s.agent != i) throw DomainError("strategies must be ordered by agent");
    if (static_cast<int>(s.choice.size()) != types_.num_types(i)) {
      throw DomainError("strategy of agent " + std::to_string(i) +
                        " is not total over its types");
    }
    for (int a : s.choice) {
      if (a < 0 || a >= mechanism_.num_actions(i)) {
        throw DomainError("strategy of agent " + std::to_string(i) +
                          " uses an unknown action");
      }
    }
  }
}

std::vector<PureStrategy> EnumeratePureStrategies(const Mechanism& mechanism,
                                                  const TypeSpace& types,
                                                  int agent, std::size_t cap) {
  const int n_types = types.num_types(agent);
  const int n_actions = mechanism.num_actions(agent);
  std::size_t count = 1;
  for (int t = 0; t < n_types; ++t) {
    if (count > cap / static_cast<std::size_t>(n_actions)) {
      throw SearchSpaceTooLarge("search space too large: agent " +
                                std::to_string(agent) + " has more than " +
                                std::to_string(cap) + " pure strategies");
    }
    count *= static_cast<std::size_t>(n_actions);
  }
  const ProfileSpace space(std::vector<int>(n_types, n_actions));
  std::vector<PureStrategy> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back({agent, space.Decode(k)});
  }
  return out;
}

Rational InterimExpectedPayoff(const BayesianGame& game,
                               const StrategyProfile& profile, int agent,
                               int type, std::optional<int> deviation,
                               EquilibriumMode mode) {
  game.CheckProfile(profile);
  const TypeSpace& types = game.types();
  const Mechanism& mechanism = game.mechanism();
  if (type < 0 || type >= types.num_types(agent)) {
    throw DomainError("type index out of range");
  }
  const int action =
      deviation ? *deviation : profile.strategies[agent].choice[type];
  if (action < 0 || action >= mechanism.num_actions(agent)) {
    throw DomainError("deviation is not an action of agent " +
                      std::to_string(agent));
  }

  const ProfileSpace& space = types.profiles();
  Rational expected = 0;
  for (std::size_t k = 0; k < space.count(); ++k) {
    Profile theta = space.Decode(k);
    if (theta[agent] != type) continue;
    const Rational weight = types.ConditionalPrior(agent, theta);
    if (weight == 0) continue;
    Profile actions = profile.ActionsAt(theta);
    actions[agent] = action;
    expected += weight * game.utilities()(agent, mechanism.OutcomeIndex(actions), type);
  }
  if (mode == EquilibriumMode::kProfitBased) {
    expected -= game.costs()(agent, action, type);
  }
  return expected;
}

BneVerdict IsBayesianNash(const BayesianGame& game,
                          const StrategyProfile& profile,
                          EquilibriumMode mode) {
  game.CheckProfile(profile);
  BneVerdict verdict;
  for (int i = 0; i < game.num_agents(); ++i) {
    for (int t = 0; t < game.types().num_types(i); ++t) {
      const Rational current =
          InterimExpectedPayoff(game, profile, i, t, std::nullopt, mode);
      for (int a = 0; a < game.mechanism().num_actions(i); ++a) {
        const Rational gain =
            InterimExpectedPayoff(game, profile, i, t, a, mode) - current;
        if (gain > 0 && (!verdict.witness || gain > verdict.witness->gain)) {
          verdict.witness = Deviation{i, t, a, gain};
        }
      }
    }
  }
  verdict.is_equilibrium = !verdict.witness.has_value();
  return verdict;
}

std::vector<StrategyProfile> FindAllPureBne(const BayesianGame& game,
                                            EquilibriumMode mode,
                                            std::size_t cap) {
  std::vector<std::vector<PureStrategy>> per_agent;
  std::vector<int> sizes;
  std::size_t total = 1;
  for (int i = 0; i < game.num_agents(); ++i) {
    per_agent.push_back(
        EnumeratePureStrategies(game.mechanism(), game.types(), i, cap));
    const std::size_t n = per_agent.back().size();
    if (total > cap / n) {
      throw SearchSpaceTooLarge("search space too large: more than " +
                                std::to_string(cap) + " strategy profiles");
    }
    total *= n;
    sizes.push_back(static_cast<int>(n));
  }
  const ProfileSpace space(std::move(sizes));
  std::vector<StrategyProfile> equilibria;
  for (std::size_t k = 0; k < space.count(); ++k) {
    const Profile pick = space.Decode(k);
    StrategyProfile profile;
    for (int i = 0; i < game.num_agents(); ++i) {
      profile.strategies.push_back(per_agent[i][pick[i]]);
    }
    if (IsBayesianNash(game, profile, mode).is_equilibrium) {
      equilibria.push_back(std::move(profile));
    }
  }
  return equilibria;
}

bool ImplementsScf(const Mechanism& mechanism, const StrategyProfile& profile,
                   const SocialChoiceFunction& scf, const TypeSpace& types) {
  if (scf.profiles() != types.profiles()) {
    throw DomainError("social choice function is defined on another type space");
  }
  const ProfileSpace& space = types.profiles();
  for (std::size_t k = 0; k < space.count(); ++k) {
    const Profile theta = space.Decode(k);
    if (!(mechanism(profile.ActionsAt(theta)) == scf(theta))) return false;
  }
  return true;
}

SocialChoiceFunction InducedScf(const Mechanism& mechanism,
                                const StrategyProfile& profile,
                                const TypeSpace& types) {
  return SocialChoiceFunction::FromRule(
      types, mechanism.outcomes(), [&](const Profile& theta) {
        return mechanism.OutcomeIndex(profile.ActionsAt(theta));
      });
}

NormalFormGame::NormalFormGame(std::vector<std::vector<std::string>> actions,
                               std::vector<std::vector<Rational>> payoffs)
    : actions_(std::move(actions)), payoffs_(std::move(payoffs)) {
  std::vector<int> sizes;
  for (const auto& a : actions_) sizes.push_back(static_cast<int>(a.size()));
  profiles_ = ProfileSpace(std::move(sizes));
  if (payoffs_.size() != profiles_.count()) {
    throw DomainError("payoff table must cover every action profile");
  }
  for (const auto& row : payoffs_) {
    if (static_cast<int>(row.size()) != num_agents()) {
      throw DomainError("payoff entry needs one value per agent");
    }
  }
}

const Rational& NormalFormGame::Payoff(const Profile& actions,
                                       int agent) const {
  return Payoffs(actions).at(agent);
}

const std::vector<Rational>& NormalFormGame::Payoffs(
    const Profile& actions) const {
  return payoffs_[profiles_.Encode(actions)];
}

NormalFormGame ExpostNormalForm(const BayesianGame& game,
                                const Profile& true_types,
                                EquilibriumMode mode) {
  game.types().CheckProfile(true_types);
  const Mechanism& mechanism = game.mechanism();
  const ProfileSpace& space = mechanism.profiles();
  std::vector<std::vector<Rational>> payoffs;
  payoffs.reserve(space.count());
  for (std::size_t k = 0; k < space.count(); ++k) {
    const Profile actions = space.Decode(k);
    const int outcome = mechanism.OutcomeIndex(actions);
    auto& row = payoffs.emplace_back();
    for (int i = 0; i < game.num_agents(); ++i) {
      Rational p = game.utilities()(i, outcome, true_types[i]);
      if (mode == EquilibriumMode::kProfitBased) {
        p -= game.costs()(i, actions[i], true_types[i]);
      }
      row.push_back(std::move(p));
    }
  }
  std::vector<std::vector<std::string>> labels;
  for (int i = 0; i < mechanism.num_agents(); ++i) {
    labels.push_back(mechanism.actions(i));
  }
  return NormalFormGame(std::move(labels), std::move(payoffs));
}

namespace {

// Compares `candidate` against `other` for agent over all opponent profiles.
// Returns {weakly better everywhere, strictly better everywhere}.
std::pair<bool, bool> Compare(const NormalFormGame& game, int agent,
                              int candidate, int other) {
  bool weak = true;
  bool strict = true;
  const ProfileSpace& space = game.profiles();
  for (std::size_t k = 0; k < space.count(); ++k) {
    Profile actions = space.Decode(k);
    if (actions[agent] != candidate) continue;
    const Rational& mine = game.Payoff(actions, agent);
    actions[agent] = other;
    const Rational& theirs = game.Payoff(actions, agent);
    if (mine < theirs) weak = false;
    if (!(mine > theirs)) strict = false;
  }
  return {weak, strict};
}

}  // namespace

std::optional<DominantAction> DominantStrategy(const NormalFormGame& game,
                                               int agent) {
  const int n = static_cast<int>(game.actions(agent).size());
  std::optional<DominantAction> weak;
  for (int a = 0; a < n; ++a) {
    bool all_weak = true;
    bool all_strict = true;
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      const auto [w, s] = Compare(game, agent, a, b);
      all_weak = all_weak && w;
      all_strict = all_strict && s;
    }
    if (all_strict) return DominantAction{a, Dominance::kStrict};
    if (all_weak && !weak) weak = DominantAction{a, Dominance::kWeak};
  }
  return weak;
}

std::vector<Profile> FindPureNash(const NormalFormGame& game) {
  std::vector<Profile> out;
  const ProfileSpace& space = game.profiles();
  for (std::size_t k = 0; k < space.count(); ++k) {
    const Profile actions = space.Decode(k);
    bool stable = true;
    for (int i = 0; stable && i < game.num_agents(); ++i) {
      Profile dev = actions;
      for (int a = 0; stable && a < space.size(i); ++a) {
        dev[i] = a;
        if (game.Payoff(dev, i) > game.Payoff(actions, i)) stable = false;
      }
    }
    if (stable) out.push_back(actions);
  }
  return out;
}

}  // namespace revaudit
