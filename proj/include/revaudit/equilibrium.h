#ifndef REVAUDIT_EQUILIBRIUM_H_
#define REVAUDIT_EQUILIBRIUM_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "revaudit/game.h"

namespace revaudit {

// Which payoff the equilibrium inequality compares: raw utility of the
// outcome, or utility net of the cost of the action played.
enum class EquilibriumMode { kUtilityBased, kProfitBased };

const char* ToString(EquilibriumMode mode);

inline constexpr std::size_t kDefaultProfileCap = 1'000'000;

class SearchSpaceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

// s_i : types -> actions, stored as one action index per type.
struct PureStrategy {
  int agent = 0;
  std::vector<int> choice;

  bool operator==(const PureStrategy&) const = default;
};

struct StrategyProfile {
  std::vector<PureStrategy> strategies;

  // Action profile played at the given type profile.
  Profile ActionsAt(const Profile& types) const;

  bool operator==(const StrategyProfile&) const = default;
};

// A mechanism together with everything needed to evaluate interim payoffs.
// `costs` is whatever each agent pays for the action it plays: strategic
// costs for an indirect mechanism, misreporting costs for a direct one.
class BayesianGame {
 public:
  BayesianGame(Mechanism mechanism, TypeSpace types, UtilityTable utilities,
               ActionCosts costs);
  BayesianGame(Mechanism mechanism, TypeSpace types, UtilityTable utilities,
               const CostModel& costs);

  const Mechanism& mechanism() const { return mechanism_; }
  const TypeSpace& types() const { return types_; }
  const UtilityTable& utilities() const { return utilities_; }
  const ActionCosts& costs() const { return costs_; }
  int num_agents() const { return mechanism_.num_agents(); }

  // Throws DomainError unless the profile has one total strategy per agent
  // with valid action indices.
  void CheckProfile(const StrategyProfile& profile) const;

 private:
  Mechanism mechanism_;
  TypeSpace types_;
  UtilityTable utilities_;
  ActionCosts costs_;
};

// All |S_i|^|Theta_i| strategies of one agent, in lexicographic order of the
// choice vector (first type most significant).
std::vector<PureStrategy> EnumeratePureStrategies(
    const Mechanism& mechanism, const TypeSpace& types, int agent,
    std::size_t cap = kDefaultProfileCap);

// E_{theta_-i}[payoff | theta_i] when the others follow `profile` and agent
// plays its profile action at `type`, or `deviation` if given.
Rational InterimExpectedPayoff(const BayesianGame& game,
                               const StrategyProfile& profile, int agent,
                               int type, std::optional<int> deviation,
                               EquilibriumMode mode);

struct Deviation {
  int agent = 0;
  int type = 0;
  int action = 0;
  Rational gain;

  bool operator==(const Deviation&) const = default;
};

struct BneVerdict {
  bool is_equilibrium = false;
  // Largest-gain profitable deviation; ties go to the lowest
  // (agent, type, action).
  std::optional<Deviation> witness;
};

BneVerdict IsBayesianNash(const BayesianGame& game,
                          const StrategyProfile& profile,
                          EquilibriumMode mode);

// Every pure-strategy profile passing IsBayesianNash, agent 0's strategy
// index most significant.
std::vector<StrategyProfile> FindAllPureBne(
    const BayesianGame& game, EquilibriumMode mode,
    std::size_t cap = kDefaultProfileCap);

// g(s(theta)) == f(theta) at every type profile.
bool ImplementsScf(const Mechanism& mechanism, const StrategyProfile& profile,
                   const SocialChoiceFunction& scf, const TypeSpace& types);

// The social choice function g o s.
SocialChoiceFunction InducedScf(const Mechanism& mechanism,
                                const StrategyProfile& profile,
                                const TypeSpace& types);

// Complete-information game at fixed true types.
class NormalFormGame {
 public:
  NormalFormGame() = default;
  NormalFormGame(std::vector<std::vector<std::string>> actions,
                 std::vector<std::vector<Rational>> payoffs);

  int num_agents() const { return static_cast<int>(actions_.size()); }
  const std::vector<std::string>& actions(int agent) const {
    return actions_.at(agent);
  }
  const ProfileSpace& profiles() const { return profiles_; }
  const Rational& Payoff(const Profile& actions, int agent) const;
  const std::vector<Rational>& Payoffs(const Profile& actions) const;

  bool operator==(const NormalFormGame&) const = default;

 private:
  std::vector<std::vector<std::string>> actions_;
  ProfileSpace profiles_;
  std::vector<std::vector<Rational>> payoffs_;
};

NormalFormGame ExpostNormalForm(const BayesianGame& game,
                                const Profile& true_types,
                                EquilibriumMode mode);

enum class Dominance { kStrict, kWeak };

struct DominantAction {
  int action = 0;
  Dominance kind = Dominance::kWeak;

  bool operator==(const DominantAction&) const = default;
};

// An action that is at least as good as every other action against every
// opponent profile. A strictly dominant action is preferred; otherwise the
// first weakly dominant one is returned.
std::optional<DominantAction> DominantStrategy(const NormalFormGame& game,
                                               int agent);

std::vector<Profile> FindPureNash(const NormalFormGame& game);

}  // namespace revaudit

#endif  // REVAUDIT_EQUILIBRIUM_H_
