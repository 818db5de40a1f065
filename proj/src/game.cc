#include "revaudit/game.h"

#include <set>
#include <string>
#include <utility>

namespace revaudit {
namespace {

std::string AgentName(int agent) { return "agent " + std::to_string(agent); }

void CheckUniqueLabels(const std::vector<std::string>& labels,
                       const std::string& what) {
  std::set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw DomainError("duplicate " + what + " label \"" + label + "\"");
    }
  }
}

int FindLabel(const std::vector<std::string>& labels, std::string_view label,
              const std::string& what) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  throw DomainError("unknown " + what + " label \"" + std::string(label) +
                    "\"");
}

template <typename T>
bool AllZero(const std::vector<std::vector<std::vector<T>>>& table) {
  for (const auto& a : table)
    for (const auto& b : a)
      for (const auto& v : b)
        if (v != 0) return false;
  return true;
}

void CheckNonnegative(const std::vector<std::vector<std::vector<Rational>>>& t,
                      const std::string& what) {
  for (const auto& a : t)
    for (const auto& b : a)
      for (const auto& v : b)
        if (v < 0) throw DomainError(what + " must be nonnegative");
}

}  // namespace

// ---------------------------------------------------------------------------
// ProfileSpace

ProfileSpace::ProfileSpace(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  for (int s : sizes_) {
    if (s <= 0) throw DomainError("every agent needs a nonempty set");
    count_ *= static_cast<std::size_t>(s);
  }
}

bool ProfileSpace::Contains(const Profile& profile) const {
  if (profile.size() != sizes_.size()) return false;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (profile[i] < 0 || profile[i] >= sizes_[i]) return false;
  }
  return true;
}

std::size_t ProfileSpace::Encode(const Profile& profile) const {
  if (!Contains(profile)) throw DomainError("profile out of range");
  std::size_t index = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    index = index * static_cast<std::size_t>(sizes_[i]) +
            static_cast<std::size_t>(profile[i]);
  }
  return index;
}

Profile ProfileSpace::Decode(std::size_t index) const {
  if (index >= count_) throw DomainError("profile index out of range");
  Profile profile(sizes_.size());
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    profile[i] = static_cast<int>(index % static_cast<std::size_t>(sizes_[i]));
    index /= static_cast<std::size_t>(sizes_[i]);
  }
  return profile;
}

// ---------------------------------------------------------------------------
// TypeSpace

TypeSpace::TypeSpace(std::vector<std::vector<std::string>> types,
                     std::vector<std::vector<Rational>> priors,
                     PriorSupport support)
    : types_(std::move(types)), priors_(std::move(priors)) {
  if (types_.empty()) throw DomainError("a type space needs at least one agent");
  if (priors_.size() != types_.size()) {
    throw DomainError("one prior per agent is required");
  }
  std::vector<int> sizes;
  for (std::size_t i = 0; i < types_.size(); ++i) {
    const int agent = static_cast<int>(i);
    if (types_[i].empty()) throw DomainError(AgentName(agent) + " has no types");
    CheckUniqueLabels(types_[i], "type");
    if (priors_[i].size() != types_[i].size()) {
      throw DomainError(AgentName(agent) + ": prior size differs from type count");
    }
    Rational total = 0;
    for (const auto& p : priors_[i]) {
      if (p < 0 || (support == PriorSupport::kFull && p == 0)) {
        throw DomainError(AgentName(agent) +
                          ": prior must give every type positive probability");
      }
      total += p;
    }
    if (total != 1) {
      throw DomainError(AgentName(agent) + ": prior sums to " +
                        ToString(total) + ", not 1");
    }
    sizes.push_back(static_cast<int>(types_[i].size()));
  }
  profiles_ = ProfileSpace(std::move(sizes));
}

TypeSpace TypeSpace::Uniform(std::vector<std::vector<std::string>> types) {
  std::vector<std::vector<Rational>> priors;
  for (const auto& t : types) {
    if (t.empty()) throw DomainError("every agent needs at least one type");
    priors.emplace_back(t.size(), Rational(1, static_cast<long>(t.size())));
  }
  return TypeSpace(std::move(types), std::move(priors));
}

void TypeSpace::CheckAgent(int agent) const {
  if (agent < 0 || agent >= num_agents()) {
    throw DomainError("unknown " + AgentName(agent));
  }
}

int TypeSpace::num_types(int agent) const {
  CheckAgent(agent);
  return static_cast<int>(types_[agent].size());
}

const std::vector<std::string>& TypeSpace::types(int agent) const {
  CheckAgent(agent);
  return types_[agent];
}

const std::string& TypeSpace::label(int agent, int type) const {
  CheckAgent(agent);
  if (type < 0 || type >= num_types(agent)) {
    throw DomainError(AgentName(agent) + ": type index out of range");
  }
  return types_[agent][type];
}

int TypeSpace::IndexOf(int agent, std::string_view label) const {
  CheckAgent(agent);
  return FindLabel(types_[agent], label, "type");
}

const Rational& TypeSpace::prior(int agent, int type) const {
  label(agent, type);
  return priors_[agent][type];
}

Profile TypeSpace::ParseProfile(std::span<const std::string> labels) const {
  if (static_cast<int>(labels.size()) != num_agents()) {
    throw DomainError("type profile has " + std::to_string(labels.size()) +
                      " entries for " + std::to_string(num_agents()) +
                      " agents");
  }
  Profile profile;
  for (int i = 0; i < num_agents(); ++i) {
    profile.push_back(IndexOf(i, labels[i]));
  }
  return profile;
}

void TypeSpace::CheckProfile(const Profile& types) const {
  if (!profiles_.Contains(types)) throw DomainError("invalid type profile");
}

Rational TypeSpace::JointPrior(const Profile& types) const {
  CheckProfile(types);
  Rational p = 1;
  for (int i = 0; i < num_agents(); ++i) p *= priors_[i][types[i]];
  return p;
}

Rational TypeSpace::ConditionalPrior(int agent, const Profile& types) const {
  CheckAgent(agent);
  CheckProfile(types);
  Rational p = 1;
  for (int i = 0; i < num_agents(); ++i) {
    if (i != agent) p *= priors_[i][types[i]];
  }
  return p;
}

Rational JointPrior(const TypeSpace& types,
                    std::span<const std::string> labels) {
  return types.JointPrior(types.ParseProfile(labels));
}

// ---------------------------------------------------------------------------
// Outcomes

OutcomeSet::OutcomeSet(std::vector<Outcome> outcomes)
    : outcomes_(std::move(outcomes)) {
  std::vector<std::string> labels;
  for (const auto& o : outcomes_) labels.push_back(o.label);
  CheckUniqueLabels(labels, "outcome");
}

const Outcome& OutcomeSet::operator[](int index) const {
  if (index < 0 || index >= static_cast<int>(outcomes_.size())) {
    throw DomainError("outcome index out of range");
  }
  return outcomes_[index];
}

int OutcomeSet::IndexOf(std::string_view label) const {
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    if (outcomes_[i].label == label) return static_cast<int>(i);
  }
  throw DomainError("unknown outcome label \"" + std::string(label) + "\"");
}

SocialChoiceFunction::SocialChoiceFunction(ProfileSpace type_profiles,
                                           OutcomeSet outcomes,
                                           std::vector<int> table)
    : profiles_(std::move(type_profiles)),
      outcomes_(std::move(outcomes)),
      table_(std::move(table)) {
  if (table_.size() != profiles_.count()) {
    throw DomainError("social choice function must assign exactly one outcome "
                      "to every type profile");
  }
  for (int o : table_) {
    if (o < 0 || o >= static_cast<int>(outcomes_.size())) {
      throw DomainError("social choice function refers to an unknown outcome");
    }
  }
}

SocialChoiceFunction SocialChoiceFunction::FromRule(
    const TypeSpace& types, OutcomeSet outcomes,
    const std::function<int(const Profile&)>& rule) {
  const ProfileSpace& space = types.profiles();
  std::vector<int> table;
  table.reserve(space.count());
  for (std::size_t k = 0; k < space.count(); ++k) {
    table.push_back(rule(space.Decode(k)));
  }
  return SocialChoiceFunction(space, std::move(outcomes), std::move(table));
}

int SocialChoiceFunction::OutcomeIndex(const Profile& types) const {
  return table_[profiles_.Encode(types)];
}

const Outcome& EvaluateScf(const SocialChoiceFunction& scf,
                           const TypeSpace& types,
                           std::span<const std::string> labels) {
  if (types.profiles() != scf.profiles()) {
    throw DomainError("social choice function is defined on another type space");
  }
  return scf(types.ParseProfile(labels));
}

// ---------------------------------------------------------------------------
// Mechanism

Mechanism::Mechanism(std::vector<std::vector<std::string>> actions,
                     OutcomeSet outcomes, std::vector<int> table)
    : actions_(std::move(actions)),
      outcomes_(std::move(outcomes)),
      table_(std::move(table)) {
  if (actions_.empty()) throw DomainError("a mechanism needs at least one agent");
  std::vector<int> sizes;
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (actions_[i].empty()) {
      throw DomainError(AgentName(static_cast<int>(i)) + " has no actions");
    }
    CheckUniqueLabels(actions_[i], "action");
    sizes.push_back(static_cast<int>(actions_[i].size()));
  }
  profiles_ = ProfileSpace(std::move(sizes));
  if (table_.size() != profiles_.count()) {
    throw DomainError("outcome function must be total over action profiles");
  }
  for (int o : table_) {
    if (o < 0 || o >= static_cast<int>(outcomes_.size())) {
      throw DomainError("outcome function refers to an unknown outcome");
    }
  }
}

Mechanism Mechanism::FromRule(std::vector<std::vector<std::string>> actions,
                              OutcomeSet outcomes,
                              const std::function<int(const Profile&)>& rule) {
  std::vector<int> sizes;
  for (const auto& a : actions) sizes.push_back(static_cast<int>(a.size()));
  const ProfileSpace space(sizes);
  std::vector<int> table;
  table.reserve(space.count());
  for (std::size_t k = 0; k < space.count(); ++k) {
    table.push_back(rule(space.Decode(k)));
  }
  return Mechanism(std::move(actions), std::move(outcomes), std::move(table));
}

int Mechanism::num_actions(int agent) const { return static_cast<int>(actions(agent).size()); }

const std::vector<std::string>& Mechanism::actions(int agent) const {
  if (agent < 0 || agent >= num_agents()) {
    throw DomainError("unknown " + AgentName(agent));
  }
  return actions_[agent];
}

const std::string& Mechanism::label(int agent, int action) const {
  const auto& a = actions(agent);
  if (action < 0 || action >= static_cast<int>(a.size())) {
    throw DomainError(AgentName(agent) + ": action index out of range");
  }
  return a[action];
}

int Mechanism::IndexOf(int agent, std::string_view label) const {
  return FindLabel(actions(agent), label, "action");
}

int Mechanism::OutcomeIndex(const Profile& actions) const {
  return table_[profiles_.Encode(actions)];
}

// ---------------------------------------------------------------------------
// Costs and utilities

ActionCosts::ActionCosts(std::vector<std::vector<std::vector<Rational>>> table)
    : table_(std::move(table)) {
  CheckNonnegative(table_, "strategic costs");
}

ActionCosts ActionCosts::Zero(const Mechanism& mechanism,
                              const TypeSpace& types) {
  if (mechanism.num_agents() != types.num_agents()) {
    throw DomainError("mechanism and type space disagree on the agent count");
  }
  std::vector<std::vector<std::vector<Rational>>> table;
  for (int i = 0; i < mechanism.num_agents(); ++i) {
    table.emplace_back(mechanism.num_actions(i),
                       std::vector<Rational>(types.num_types(i)));
  }
  return ActionCosts(std::move(table));
}

const Rational& ActionCosts::operator()(int agent, int action, int type) const {
  if (agent < 0 || agent >= static_cast<int>(table_.size()) || action < 0 ||
      action >= static_cast<int>(table_[agent].size()) || type < 0 ||
      type >= static_cast<int>(table_[agent][action].size())) {
    throw DomainError("strategic cost lookup out of range");
  }
  return table_[agent][action][type];
}

bool ActionCosts::IsZero() const { return AllZero(table_); }

void ActionCosts::CheckShape(const Mechanism& mechanism,
                             const TypeSpace& types) const {
  bool ok = static_cast<int>(table_.size()) == mechanism.num_agents() &&
            mechanism.num_agents() == types.num_agents();
  for (int i = 0; ok && i < mechanism.num_agents(); ++i) {
    ok = static_cast<int>(table_[i].size()) == mechanism.num_actions(i);
    for (int a = 0; ok && a < mechanism.num_actions(i); ++a) {
      ok = static_cast<int>(table_[i][a].size()) == types.num_types(i);
    }
  }
  if (!ok) throw DomainError("strategic cost table does not match the game");
}

MisreportCosts::MisreportCosts(
    std::vector<std::vector<std::vector<Rational>>> table)
    : table_(std::move(table)) {
  CheckNonnegative(table_, "misreporting costs");
  for (const auto& agent : table_) {
    for (std::size_t t = 0; t < agent.size(); ++t) {
      if (t >= agent[t].size()) {
        throw DomainError("misreporting cost table must be square per agent");
      }
      if (agent[t][t] != 0) {
        throw DomainError("truthful reports must cost nothing");
      }
    }
  }
}

MisreportCosts MisreportCosts::Zero(const TypeSpace& types) {
  std::vector<std::vector<std::vector<Rational>>> table;
  for (int i = 0; i < types.num_agents(); ++i) {
    table.emplace_back(types.num_types(i),
                       std::vector<Rational>(types.num_types(i)));
  }
  return MisreportCosts(std::move(table));
}

const Rational& MisreportCosts::operator()(int agent, int truth,
                                           int reported) const {
  if (agent < 0 || agent >= static_cast<int>(table_.size()) || truth < 0 ||
      truth >= static_cast<int>(table_[agent].size()) || reported < 0 ||
      reported >= static_cast<int>(table_[agent][truth].size())) {
    throw DomainError("misreporting cost lookup out of range");
  }
  return table_[agent][truth][reported];
}

bool MisreportCosts::IsZero() const { return AllZero(table_); }

void MisreportCosts::CheckShape(const TypeSpace& types) const {
  bool ok = static_cast<int>(table_.size()) == types.num_agents();
  for (int i = 0; ok && i < types.num_agents(); ++i) {
    ok = static_cast<int>(table_[i].size()) == types.num_types(i);
    for (int t = 0; ok && t < types.num_types(i); ++t) {
      ok = static_cast<int>(table_[i][t].size()) == types.num_types(i);
    }
  }
  if (!ok) throw DomainError("misreporting cost table does not match the types");
}

CostModel CostModel::Zero(const Mechanism& mechanism, const TypeSpace& types) {
  return {ActionCosts::Zero(mechanism, types), MisreportCosts::Zero(types)};
}

UtilityTable::UtilityTable(std::vector<std::vector<std::vector<Rational>>> table)
    : table_(std::move(table)) {}

UtilityTable UtilityTable::FromRule(
    const OutcomeSet& outcomes, const TypeSpace& types,
    const std::function<Rational(int, int, int)>& rule) {
  std::vector<std::vector<std::vector<Rational>>> table(types.num_agents());
  for (int i = 0; i < types.num_agents(); ++i) {
    for (int x = 0; x < static_cast<int>(outcomes.size()); ++x) {
      auto& row = table[i].emplace_back();
      for (int t = 0; t < types.num_types(i); ++t) row.push_back(rule(i, x, t));
    }
  }
  return UtilityTable(std::move(table));
}

const Rational& UtilityTable::operator()(int agent, int outcome,
                                         int type) const {
  if (agent < 0 || agent >= static_cast<int>(table_.size()) || outcome < 0 ||
      outcome >= static_cast<int>(table_[agent].size()) || type < 0 ||
      type >= static_cast<int>(table_[agent][outcome].size())) {
    throw DomainError("utility lookup out of range");
  }
  return table_[agent][outcome][type];
}

void UtilityTable::CheckShape(const OutcomeSet& outcomes,
                              const TypeSpace& types) const {
  bool ok = static_cast<int>(table_.size()) == types.num_agents();
  for (int i = 0; ok && i < types.num_agents(); ++i) {
    ok = table_[i].size() == outcomes.size();
    for (std::size_t x = 0; ok && x < outcomes.size(); ++x) {
      ok = static_cast<int>(table_[i][x].size()) == types.num_types(i);
    }
  }
  if (!ok) throw DomainError("utility table does not match the game");
}

Rational Profit(int agent, int outcome, int action, int type,
                const UtilityTable& utilities, const ActionCosts& costs) {
  return utilities(agent, outcome, type) - costs(agent, action, type);
}

Rational Profit(const Mechanism& mechanism, const TypeSpace& types, int agent,
                std::string_view outcome, std::string_view action,
                std::string_view type, const UtilityTable& utilities,
                const CostModel& costs) {
  return Profit(agent, mechanism.outcomes().IndexOf(outcome),
                mechanism.IndexOf(agent, action), types.IndexOf(agent, type),
                utilities, costs.strategic);
}

}  // namespace revaudit
