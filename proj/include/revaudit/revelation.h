#ifndef REVAUDIT_REVELATION_H_
#define REVAUDIT_REVELATION_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "revaudit/equilibrium.h"
#include "revaudit/game.h"

namespace revaudit {

// Direct revelation mechanism of a social choice function: each agent's
// actions are its type labels and the outcome function is the SCF table.
//
// Reports carry no strategic cost. There is no way to attach one; the only
// charge an agent can incur is the misreporting schedule, and only when the
// report differs from its true type.
class DirectMechanism {
 public:
  const Mechanism& mechanism() const { return mechanism_; }
  const TypeSpace& types() const { return types_; }
  const MisreportCosts& misreport_costs() const { return misreport_; }

  // Always zero; exposed so callers can verify it.
  ActionCosts StrategicCosts() const;
  // misreport(agent, truth, report) laid out as [agent][report][truth].
  ActionCosts ReportingCosts() const;

  // Interim game of the direct mechanism. With `charge_misreports` false the
  // payoffs are pure utilities.
  BayesianGame Game(const UtilityTable& utilities,
                    bool charge_misreports = true) const;

  StrategyProfile TruthfulProfile() const;
  SocialChoiceFunction Scf() const;

  bool operator==(const DirectMechanism&) const = default;

 private:
  friend DirectMechanism DirectMechanismFromScf(const SocialChoiceFunction&,
                                                const TypeSpace&,
                                                const CostModel&);
  DirectMechanism(Mechanism mechanism, TypeSpace types,
                  MisreportCosts misreport)
      : mechanism_(std::move(mechanism)),
        types_(std::move(types)),
        misreport_(std::move(misreport)) {}

  Mechanism mechanism_;
  TypeSpace types_;
  MisreportCosts misreport_;
};

// The strategic component of `costs` is ignored.
DirectMechanism DirectMechanismFromScf(const SocialChoiceFunction& scf,
                                       const TypeSpace& types,
                                       const CostModel& costs);

// Complete-information report game at fixed true types.
NormalFormGame ExpostNormalForm(const DirectMechanism& direct,
                                const Profile& true_types,
                                const UtilityTable& utilities,
                                bool apply_misreport, EquilibriumMode mode);

struct TruthfulVerdict {
  bool truthful = false;
  // (agent, true type, misreport, gain) with the largest gain.
  std::optional<Deviation> witness;
};

// Is truth-telling a Bayesian Nash equilibrium of the direct mechanism, with
// misreports paying their cost?
TruthfulVerdict IsTruthfullyImplementable(const SocialChoiceFunction& scf,
                                          const TypeSpace& types,
                                          const CostModel& costs,
                                          const UtilityTable& utilities);

struct ChainBreak {
  int agent = 0;
  int type = 0;
  int report = 0;
  // How much the misreport beats truth-telling on utilities alone.
  Rational gap;

  bool operator==(const ChainBreak&) const = default;
};

// Step-by-step replay of the textbook argument that an indirect equilibrium
// yields a truthful direct one, evaluated with costs retained.
struct ProofChain {
  // The profile is not an implementing profit-based equilibrium, so the
  // argument has no premise. Fields are still evaluated.
  bool vacuous = false;
  // Profit-based equilibrium inequality at s*, every deviation in S_i.
  bool equilibrium_with_costs = false;
  // Same inequality with f(theta) substituted for g(s*(theta)) on the left;
  // quantified over all actions in S_i.
  bool action_restricted_with_costs = false;
  // Only deviations of the form s*_i(theta_hat), costs kept on both sides;
  // quantified over types theta_hat.
  bool type_restricted_with_costs = false;
  // Truth-telling in the direct mechanism, utilities only.
  bool truthful_cost_free = false;
  // A point where the type-restricted inequality holds but truthful
  // utilities fail; largest gap, ties to the lowest (agent, type, report).
  std::optional<ChainBreak> break_point;

  bool operator==(const ProofChain&) const = default;
};

ProofChain AuditProofChain(const Mechanism& mechanism,
                           const StrategyProfile& profile,
                           const SocialChoiceFunction& scf,
                           const TypeSpace& types,
                           const UtilityTable& utilities,
                           const CostModel& costs);

struct AuditReport {
  std::optional<StrategyProfile> indirect_equilibrium;
  bool indirect_is_bne = false;
  bool implements_scf = false;
  bool implemented = false;
  bool truthful_is_bne = false;
  // implemented && !truthful_is_bne
  bool violation = false;
  std::optional<Deviation> truthful_witness;
  ProofChain chain;

  bool operator==(const AuditReport&) const = default;
};

AuditReport AuditRevelationPrinciple(const Mechanism& mechanism,
                                     const StrategyProfile& profile,
                                     const SocialChoiceFunction& scf,
                                     const TypeSpace& types,
                                     const UtilityTable& utilities,
                                     const CostModel& costs);

// Searches for a profit-based equilibrium of `mechanism` implementing `scf`
// and audits the first one found. If none exists the report has no profile
// and `implemented` is false.
AuditReport AuditRevelationPrinciple(const Mechanism& mechanism,
                                     const SocialChoiceFunction& scf,
                                     const TypeSpace& types,
                                     const UtilityTable& utilities,
                                     const CostModel& costs,
                                     std::size_t cap = kDefaultProfileCap);

}  // namespace revaudit

#endif  // REVAUDIT_REVELATION_H_
