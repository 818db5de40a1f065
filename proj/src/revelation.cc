#include "revaudit/revelation.h"

#include <utility>

namespace revaudit {

ActionCosts DirectMechanism::StrategicCosts() const {
  return ActionCosts::Zero(mechanism_, types_);
}

ActionCosts DirectMechanism::ReportingCosts() const {
  std::vector<std::vector<std::vector<Rational>>> table(types_.num_agents());
  for (int i = 0; i < types_.num_agents(); ++i) {
    const int n = types_.num_types(i);
    for (int report = 0; report < n; ++report) {
      auto& row = table[i].emplace_back();
      for (int truth = 0; truth < n; ++truth) {
        row.push_back(misreport_(i, truth, report));
      }
    }
  }
  return ActionCosts(std::move(table));
}

BayesianGame DirectMechanism::Game(const UtilityTable& utilities,
                                   bool charge_misreports) const {
  return BayesianGame(mechanism_, types_, utilities,
                      charge_misreports ? ReportingCosts() : StrategicCosts());
}

StrategyProfile DirectMechanism::TruthfulProfile() const {
  StrategyProfile profile;
  for (int i = 0; i < types_.num_agents(); ++i) {
    PureStrategy s{i, {}};
    for (int t = 0; t < types_.num_types(i); ++t) s.choice.push_back(t);
    profile.strategies.push_back(std::move(s));
  }
  return profile;
}

SocialChoiceFunction DirectMechanism::Scf() const {
  return SocialChoiceFunction::FromRule(
      types_, mechanism_.outcomes(),
      [&](const Profile& theta) { return mechanism_.OutcomeIndex(theta); });
}

DirectMechanism DirectMechanismFromScf(const SocialChoiceFunction& scf,
                                       const TypeSpace& types,
                                       const CostModel& costs) {
  if (scf.profiles() != types.profiles()) {
    throw DomainError("social choice function is defined on another type space");
  }
  costs.misreport.CheckShape(types);
  std::vector<std::vector<std::string>> reports;
  for (int i = 0; i < types.num_agents(); ++i) reports.push_back(types.types(i));
  // Report profiles and type profiles share the same indexing.
  Mechanism mechanism(std::move(reports), scf.outcomes(), scf.table());
  return DirectMechanism(std::move(mechanism), types, costs.misreport);
}

NormalFormGame ExpostNormalForm(const DirectMechanism& direct,
                                const Profile& true_types,
                                const UtilityTable& utilities,
                                bool apply_misreport, EquilibriumMode mode) {
  return ExpostNormalForm(direct.Game(utilities, apply_misreport), true_types,
                          mode);
}

TruthfulVerdict IsTruthfullyImplementable(const SocialChoiceFunction& scf,
                                          const TypeSpace& types,
                                          const CostModel& costs,
                                          const UtilityTable& utilities) {
  const DirectMechanism direct = DirectMechanismFromScf(scf, types, costs);
  const BneVerdict verdict =
      IsBayesianNash(direct.Game(utilities), direct.TruthfulProfile(),
                     EquilibriumMode::kProfitBased);
  return {verdict.is_equilibrium, verdict.witness};
}

ProofChain AuditProofChain(const Mechanism& mechanism,
                           const StrategyProfile& profile,
                           const SocialChoiceFunction& scf,
                           const TypeSpace& types,
                           const UtilityTable& utilities,
                           const CostModel& costs) {
  const BayesianGame game(mechanism, types, utilities, costs);
  game.CheckProfile(profile);
  if (scf.outcomes() != mechanism.outcomes()) {
    throw DomainError("mechanism and social choice function use different "
                      "outcome sets");
  }
  const DirectMechanism direct = DirectMechanismFromScf(scf, types, costs);
  const BayesianGame truthful_game = direct.Game(utilities, false);
  const StrategyProfile truthful = direct.TruthfulProfile();
  constexpr auto kProfit = EquilibriumMode::kProfitBased;

  ProofChain chain;
  chain.vacuous = !IsBayesianNash(game, profile, kProfit).is_equilibrium ||
                  !ImplementsScf(mechanism, profile, scf, types);
  chain.equilibrium_with_costs = true;
  chain.action_restricted_with_costs = true;
  chain.type_restricted_with_costs = true;
  chain.truthful_cost_free = true;

  for (int i = 0; i < types.num_agents(); ++i) {
    const auto& own = profile.strategies[i].choice;
    for (int t = 0; t < types.num_types(i); ++t) {
      const Rational at_equilibrium =
          InterimExpectedPayoff(game, profile, i, t, std::nullopt, kProfit);
      // Left side rewritten through f: E[u(f(theta))] - c(s*_i(theta_i)).
      const Rational through_scf =
          InterimExpectedPayoff(truthful_game, truthful, i, t, std::nullopt,
                                EquilibriumMode::kUtilityBased) -
          costs.strategic(i, own[t], t);

      for (int a = 0; a < mechanism.num_actions(i); ++a) {
        const Rational deviating =
            InterimExpectedPayoff(game, profile, i, t, a, kProfit);
        if (at_equilibrium < deviating) chain.equilibrium_with_costs = false;
        if (through_scf < deviating) chain.action_restricted_with_costs = false;
      }

      const Rational truthful_utility = InterimExpectedPayoff(
          truthful_game, truthful, i, t, std::nullopt,
          EquilibriumMode::kUtilityBased);
      for (int r = 0; r < types.num_types(i); ++r) {
        const Rational mimic =
            InterimExpectedPayoff(game, profile, i, t, own[r], kProfit);
        const bool restricted_holds = at_equilibrium >= mimic;
        if (!restricted_holds) chain.type_restricted_with_costs = false;

        const Rational gap =
            InterimExpectedPayoff(truthful_game, truthful, i, t, r,
                                  EquilibriumMode::kUtilityBased) -
            truthful_utility;
        if (gap > 0) {
          chain.truthful_cost_free = false;
          if (restricted_holds &&
              (!chain.break_point || gap > chain.break_point->gap)) {
            chain.break_point = ChainBreak{i, t, r, gap};
          }
        }
      }
    }
  }
  return chain;
}

AuditReport AuditRevelationPrinciple(const Mechanism& mechanism,
                                     const StrategyProfile& profile,
                                     const SocialChoiceFunction& scf,
                                     const TypeSpace& types,
                                     const UtilityTable& utilities,
                                     const CostModel& costs) {
  const BayesianGame game(mechanism, types, utilities, costs);
  game.CheckProfile(profile);
  if (scf.outcomes() != mechanism.outcomes()) {
    throw DomainError("mechanism and social choice function use different "
                      "outcome sets");
  }
  AuditReport report;
  report.indirect_equilibrium = profile;
  report.indirect_is_bne =
      IsBayesianNash(game, profile, EquilibriumMode::kProfitBased)
          .is_equilibrium;
  report.implements_scf = ImplementsScf(mechanism, profile, scf, types);
  report.implemented = report.indirect_is_bne && report.implements_scf;
  const TruthfulVerdict truthful =
      IsTruthfullyImplementable(scf, types, costs, utilities);
  report.truthful_is_bne = truthful.truthful;
  report.truthful_witness = truthful.witness;
  report.violation = report.implemented && !report.truthful_is_bne;
  report.chain =
      AuditProofChain(mechanism, profile, scf, types, utilities, costs);
  return report;
}

AuditReport AuditRevelationPrinciple(const Mechanism& mechanism,
                                     const SocialChoiceFunction& scf,
                                     const TypeSpace& types,
                                     const UtilityTable& utilities,
                                     const CostModel& costs,
                                     std::size_t cap) {
  const BayesianGame game(mechanism, types, utilities, costs);
  for (const auto& candidate :
       FindAllPureBne(game, EquilibriumMode::kProfitBased, cap)) {
    if (ImplementsScf(mechanism, candidate, scf, types)) {
      return AuditRevelationPrinciple(mechanism, candidate, scf, types,
                                      utilities, costs);
    }
  }
  AuditReport report;
  const TruthfulVerdict truthful =
      IsTruthfullyImplementable(scf, types, costs, utilities);
  report.truthful_is_bne = truthful.truthful;
  report.truthful_witness = truthful.witness;
  report.chain.vacuous = true;
  return report;
}

}  // namespace revaudit
