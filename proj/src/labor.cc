#include "revaudit/labor.h"

#include <utility>

namespace revaudit::labor {
namespace {

const std::vector<std::string> kTypeLabels = {"theta_L", "theta_H"};
const std::vector<std::string> kBidLabels = {"0", "e_H"};

OutcomeSet HiringOutcomes() {
  return OutcomeSet({
      {"agent1_hired", {Rational(1), Rational(0)}},
      {"split", {Rational(1, 2), Rational(1, 2)}},
      {"agent2_hired", {Rational(0), Rational(1)}},
  });
}

// Higher index wins; equal indices split.
int Contest(int first, int second) {
  if (first > second) return kAgent1Hired;
  if (first < second) return kAgent2Hired;
  return kSplit;
}

}  // namespace

const std::vector<std::string>& TypeLabels() { return kTypeLabels; }
const std::vector<std::string>& BidLabels() { return kBidLabels; }

void LaborParams::Validate() const {
  if (!(theta_low > 0)) throw DomainError("theta_L must be positive");
  if (!(theta_high > theta_low)) {
    throw DomainError("theta_H must be greater than theta_L");
  }
  if (!(education > 0)) throw DomainError("e_H must be positive");
  if (!(wage > 0)) throw DomainError("w must be positive");
  if (misreport_cost < 0) throw DomainError("c_mis must be nonnegative");
  for (const auto& p : prior_high) {
    if (!(p > 0 && p < 1)) {
      throw DomainError("prior_high must lie strictly between 0 and 1");
    }
  }
}

BayesianGame LaborScenario::IndirectGame() const {
  return BayesianGame(mechanism, types, utilities, costs);
}

DirectMechanism LaborScenario::Direct() const {
  return DirectMechanismFromScf(scf, types, costs);
}

LaborScenario BuildLaborScenario(const LaborParams& params) {
  params.Validate();
  const OutcomeSet outcomes = HiringOutcomes();

  std::vector<std::vector<Rational>> priors;
  for (const auto& p : params.prior_high) priors.push_back({1 - p, p});
  TypeSpace types({kTypeLabels, kTypeLabels}, std::move(priors));

  auto scf = SocialChoiceFunction::FromRule(
      types, outcomes, [](const Profile& t) { return Contest(t[0], t[1]); });
  auto mechanism = Mechanism::FromRule(
      {kBidLabels, kBidLabels}, outcomes,
      [](const Profile& b) { return Contest(b[0], b[1]); });

  const Rational wage = params.wage;
  auto utilities = UtilityTable::FromRule(
      outcomes, types, [&](int agent, int outcome, int) {
        return wage * outcomes[outcome].payload[agent];
      });

  const std::array<Rational, 2> bid_value = {Rational(0), params.education};
  const std::array<Rational, 2> productivity = {params.theta_low,
                                                params.theta_high};
  std::vector<std::vector<std::vector<Rational>>> strategic(2);
  std::vector<std::vector<std::vector<Rational>>> misreport(2);
  for (int i = 0; i < 2; ++i) {
    for (int b = 0; b < 2; ++b) {
      auto& row = strategic[i].emplace_back();
      for (int t = 0; t < 2; ++t) {
        row.push_back(params.charge_education ? bid_value[b] / productivity[t]
                                              : Rational(0));
      }
    }
    // Only a low type claiming to be high pays.
    misreport[i] = {{Rational(0), params.misreport_cost},
                    {Rational(0), Rational(0)}};
  }
  CostModel costs{ActionCosts(std::move(strategic)),
                  MisreportCosts(std::move(misreport))};

  return LaborScenario{params,
                       std::move(types),
                       std::move(scf),
                       std::move(mechanism),
                       std::move(utilities),
                       std::move(costs),
                       SeparatingProfile()};
}

OpenInterval WageWindow(const LaborParams& params) {
  params.Validate();
  return {2 * params.education / params.theta_high,
          2 * params.education / params.theta_low};
}

StrategyProfile SeparatingProfile() {
  StrategyProfile profile;
  for (int i = 0; i < 2; ++i) {
    PureStrategy s{i, std::vector<int>(2)};
    s.choice[kLow] = kNoEducation;
    s.choice[kHigh] = kEducated;
    profile.strategies.push_back(std::move(s));
  }
  return profile;
}

SeparatingReport CheckSeparatingEquilibrium(const LaborParams& params) {
  const LaborScenario scenario = BuildLaborScenario(params);
  const BayesianGame game = scenario.IndirectGame();

  SeparatingReport report;
  report.window = WageWindow(params);
  report.in_window = report.window.Contains(params.wage);
  const BneVerdict verdict = IsBayesianNash(game, scenario.separating,
                                            EquilibriumMode::kProfitBased);
  report.separating_is_bne = verdict.is_equilibrium;
  report.witness = verdict.witness;
  report.implements_scf = ImplementsScf(scenario.mechanism, scenario.separating,
                                        scenario.scf, scenario.types);

  report.ir_margin =
      params.wage / 2 - scenario.costs.strategic(0, kEducated, kHigh);
  report.ir_satisfied = report.ir_margin > 0;

  int k = 0;
  for (int own : {kLow, kHigh}) {
    for (int other : {kLow, kHigh}) {
      const NormalFormGame nf = ExpostNormalForm(
          game, Profile{own, other}, EquilibriumMode::kProfitBased);
      const int opponent_bid = scenario.separating.strategies[1].choice[other];
      BestResponseCase& c = report.cases[k++];
      c.own_type = own;
      c.opponent_type = other;
      c.value_educated = nf.Payoff({kEducated, opponent_bid}, 0);
      c.value_uneducated = nf.Payoff({kNoEducation, opponent_bid}, 0);
      if (c.value_educated > c.value_uneducated) c.best = kEducated;
      if (c.value_educated < c.value_uneducated) c.best = kNoEducation;
    }
  }
  report.notes.push_back(
      "IR constraint evaluated as w/2 - e_H/theta_H > 0 (the education level "
      "of the high type is e_H)");
  if (!report.in_window) {
    report.notes.push_back("wage " + ToString(params.wage) +
                           " is outside the open window (" +
                           ToString(report.window.lower) + ", " +
                           ToString(report.window.upper) + ")");
  }
  return report;
}

std::array<CaseMatrix, 4> CaseMatrices(const LaborParams& params) {
  const LaborScenario scenario = BuildLaborScenario(params);
  const DirectMechanism direct = scenario.Direct();
  std::array<CaseMatrix, 4> out;
  for (std::size_t k = 0; k < kCaseTypes.size(); ++k) {
    NormalFormGame nf =
        ExpostNormalForm(direct, kCaseTypes[k], scenario.utilities, true,
                         EquilibriumMode::kProfitBased);
    std::array<std::optional<DominantAction>, 2> dominant = {
        DominantStrategy(nf, 0), DominantStrategy(nf, 1)};
    std::vector<Profile> nash = FindPureNash(nf);
    out[k] = CaseMatrix{kCaseTypes[k], std::move(nf), dominant,
                        std::move(nash)};
  }
  return out;
}

DirectReport CheckDirectMechanism(const LaborParams& params, std::size_t cap) {
  const LaborScenario scenario = BuildLaborScenario(params);
  const DirectMechanism direct = scenario.Direct();

  DirectReport report;
  report.cmis_below_half_wage = params.misreport_cost < params.wage / 2;
  const TruthfulVerdict truthful = IsTruthfullyImplementable(
      scenario.scf, scenario.types, scenario.costs, scenario.utilities);
  report.truthful_is_bne = truthful.truthful;
  report.truthful_witness = truthful.witness;

  report.equilibria = FindAllPureBne(direct.Game(scenario.utilities),
                                     EquilibriumMode::kProfitBased, cap);
  StrategyProfile all_high;
  for (int i = 0; i < 2; ++i) all_high.strategies.push_back({i, {kHigh, kHigh}});
  report.unique_bne_all_report_high =
      report.equilibria.size() == 1 && report.equilibria.front() == all_high;

  report.cases = CaseMatrices(params);

  // Reports depend only on the reporter's own type, so strict ex-post
  // dominance at every true-type profile pins down a single Bayesian profile.
  StrategyProfile predicted;
  for (int i = 0; i < 2; ++i) predicted.strategies.push_back({i, {-1, -1}});
  bool predictable = true;
  for (const CaseMatrix& c : report.cases) {
    for (int i = 0; i < 2 && predictable; ++i) {
      const auto& d = c.dominant[i];
      if (!d || d->kind != Dominance::kStrict) {
        predictable = false;
        break;
      }
      int& slot = predicted.strategies[i].choice[c.true_types[i]];
      if (slot != -1 && slot != d->action) predictable = false;
      slot = d->action;
    }
  }
  if (predictable) {
    report.expost_prediction = predicted;
    report.views_agree = report.equilibria.size() == 1 &&
                         report.equilibria.front() == predicted;
  }
  report.notes.push_back(
      "equilibrium uniqueness is certified over pure strategy profiles only");
  return report;
}

Rational FirmExpectedUtility(const LaborScenario& scenario, const Profile& bids,
                             const Profile& true_types) {
  scenario.types.CheckProfile(true_types);
  const Outcome& outcome = scenario.mechanism(bids);
  const std::array<Rational, 2> productivity = {scenario.params.theta_low,
                                                scenario.params.theta_high};
  return outcome.payload[0] * productivity[true_types[0]] +
         outcome.payload[1] * productivity[true_types[1]] -
         scenario.params.wage;
}

AuditReport AuditLabor(const LaborParams& params) {
  const LaborScenario s = BuildLaborScenario(params);
  return AuditRevelationPrinciple(s.mechanism, s.separating, s.scf, s.types,
                                  s.utilities, s.costs);
}

}  // namespace revaudit::labor
