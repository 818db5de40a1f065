#ifndef REVAUDIT_GAME_H_
#define REVAUDIT_GAME_H_

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "revaudit/rational.h"

namespace revaudit {

// Raised for unknown labels, out-of-range indices and tables whose shape does
// not match the game they are used with.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One index per agent: a type profile or an action profile.
using Profile = std::vector<int>;

// Mixed-radix indexing of profiles. Agent 0 is the most significant digit, so
// increasing flat indices visit profiles in lexicographic order.
class ProfileSpace {
 public:
  ProfileSpace() = default;
  explicit ProfileSpace(std::vector<int> sizes);

  int num_agents() const { return static_cast<int>(sizes_.size()); }
  int size(int agent) const { return sizes_.at(agent); }
  const std::vector<int>& sizes() const { return sizes_; }
  std::size_t count() const { return count_; }

  bool Contains(const Profile& profile) const;
  std::size_t Encode(const Profile& profile) const;
  Profile Decode(std::size_t index) const;

  bool operator==(const ProfileSpace&) const = default;

 private:
  std::vector<int> sizes_;
  std::size_t count_ = 1;
};

enum class PriorSupport {
  kFull,             // every type has strictly positive probability
  kAllowDegenerate,  // zero weights allowed; used for ex-post conditioning
};

// Finite per-agent type sets with an independent prior.
class TypeSpace {
 public:
  TypeSpace(std::vector<std::vector<std::string>> types,
            std::vector<std::vector<Rational>> priors,
            PriorSupport support = PriorSupport::kFull);

  static TypeSpace Uniform(std::vector<std::vector<std::string>> types);

  int num_agents() const { return static_cast<int>(types_.size()); }
  int num_types(int agent) const;
  const std::vector<std::string>& types(int agent) const;
  const std::string& label(int agent, int type) const;
  int IndexOf(int agent, std::string_view label) const;
  const Rational& prior(int agent, int type) const;
  const ProfileSpace& profiles() const { return profiles_; }

  Profile ParseProfile(std::span<const std::string> labels) const;
  void CheckProfile(const Profile& types) const;

  Rational JointPrior(const Profile& types) const;
  // Probability of the other agents' entries of `types`, given agent's own.
  Rational ConditionalPrior(int agent, const Profile& types) const;

  bool operator==(const TypeSpace&) const = default;

 private:
  void CheckAgent(int agent) const;

  std::vector<std::vector<std::string>> types_;
  std::vector<std::vector<Rational>> priors_;
  ProfileSpace profiles_;
};

Rational JointPrior(const TypeSpace& types,
                    std::span<const std::string> labels);

struct Outcome {
  std::string label;
  std::vector<Rational> payload;

  bool operator==(const Outcome&) const = default;
};

class OutcomeSet {
 public:
  OutcomeSet() = default;
  explicit OutcomeSet(std::vector<Outcome> outcomes);

  std::size_t size() const { return outcomes_.size(); }
  const Outcome& operator[](int index) const;
  int IndexOf(std::string_view label) const;
  auto begin() const { return outcomes_.begin(); }
  auto end() const { return outcomes_.end(); }

  bool operator==(const OutcomeSet&) const = default;

 private:
  std::vector<Outcome> outcomes_;
};

// Total map from type profiles to outcomes.
class SocialChoiceFunction {
 public:
  SocialChoiceFunction(ProfileSpace type_profiles, OutcomeSet outcomes,
                       std::vector<int> table);

  static SocialChoiceFunction FromRule(
      const TypeSpace& types, OutcomeSet outcomes,
      const std::function<int(const Profile&)>& rule);

  int OutcomeIndex(const Profile& types) const;
  const Outcome& operator()(const Profile& types) const {
    return outcomes_[OutcomeIndex(types)];
  }
  const OutcomeSet& outcomes() const { return outcomes_; }
  const ProfileSpace& profiles() const { return profiles_; }
  const std::vector<int>& table() const { return table_; }

  bool operator==(const SocialChoiceFunction&) const = default;

 private:
  ProfileSpace profiles_;
  OutcomeSet outcomes_;
  std::vector<int> table_;
};

const Outcome& EvaluateScf(const SocialChoiceFunction& scf,
                           const TypeSpace& types,
                           std::span<const std::string> labels);

// Per-agent action sets and a total outcome function over action profiles.
class Mechanism {
 public:
  Mechanism(std::vector<std::vector<std::string>> actions, OutcomeSet outcomes,
            std::vector<int> table);

  static Mechanism FromRule(std::vector<std::vector<std::string>> actions,
                            OutcomeSet outcomes,
                            const std::function<int(const Profile&)>& rule);

  int num_agents() const { return static_cast<int>(actions_.size()); }
  int num_actions(int agent) const;
  const std::vector<std::string>& actions(int agent) const;
  const std::string& label(int agent, int action) const;
  int IndexOf(int agent, std::string_view label) const;
  const ProfileSpace& profiles() const { return profiles_; }
  const OutcomeSet& outcomes() const { return outcomes_; }

  int OutcomeIndex(const Profile& actions) const;
  const Outcome& operator()(const Profile& actions) const {
    return outcomes_[OutcomeIndex(actions)];
  }

  bool operator==(const Mechanism&) const = default;

 private:
  std::vector<std::vector<std::string>> actions_;
  OutcomeSet outcomes_;
  ProfileSpace profiles_;
  std::vector<int> table_;
};

// Cost charged to an agent of a given true type for playing an action,
// indexed [agent][action][type]. All entries are nonnegative.
class ActionCosts {
 public:
  ActionCosts() = default;
  explicit ActionCosts(std::vector<std::vector<std::vector<Rational>>> table);

  static ActionCosts Zero(const Mechanism& mechanism, const TypeSpace& types);

  const Rational& operator()(int agent, int action, int type) const;
  bool IsZero() const;
  // Throws DomainError unless the table has exactly the mechanism's shape.
  void CheckShape(const Mechanism& mechanism, const TypeSpace& types) const;

  bool operator==(const ActionCosts&) const = default;

 private:
  std::vector<std::vector<std::vector<Rational>>> table_;
};

// Cost of reporting `reported` when the true type is `truth`, indexed
// [agent][truth][reported]. Zero on the diagonal.
class MisreportCosts {
 public:
  MisreportCosts() = default;
  explicit MisreportCosts(
      std::vector<std::vector<std::vector<Rational>>> table);

  static MisreportCosts Zero(const TypeSpace& types);

  const Rational& operator()(int agent, int truth, int reported) const;
  bool IsZero() const;
  void CheckShape(const TypeSpace& types) const;

  bool operator==(const MisreportCosts&) const = default;

 private:
  std::vector<std::vector<std::vector<Rational>>> table_;
};

struct CostModel {
  ActionCosts strategic;
  MisreportCosts misreport;

  static CostModel Zero(const Mechanism& mechanism, const TypeSpace& types);
  bool IsZero() const { return strategic.IsZero() && misreport.IsZero(); }

  bool operator==(const CostModel&) const = default;
};

// u_i(x, theta_i), indexed [agent][outcome][type].
class UtilityTable {
 public:
  explicit UtilityTable(std::vector<std::vector<std::vector<Rational>>> table);

  static UtilityTable FromRule(
      const OutcomeSet& outcomes, const TypeSpace& types,
      const std::function<Rational(int agent, int outcome, int type)>& rule);

  const Rational& operator()(int agent, int outcome, int type) const;
  void CheckShape(const OutcomeSet& outcomes, const TypeSpace& types) const;

  bool operator==(const UtilityTable&) const = default;

 private:
  std::vector<std::vector<std::vector<Rational>>> table_;
};

// Utility of the outcome minus the cost of the action taken. Misreporting
// costs are never applied here.
Rational Profit(int agent, int outcome, int action, int type,
                const UtilityTable& utilities, const ActionCosts& costs);

Rational Profit(const Mechanism& mechanism, const TypeSpace& types,
                int agent, std::string_view outcome, std::string_view action,
                std::string_view type, const UtilityTable& utilities,
                const CostModel& costs);

}  // namespace revaudit

#endif  // REVAUDIT_GAME_H_
