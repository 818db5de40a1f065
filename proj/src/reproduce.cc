#include "revaudit/reproduce.h"

#include <array>
#include <sstream>
#include <utility>

#include "revaudit/random_instances.h"
#include "revaudit/report.h"

namespace revaudit {
namespace {

using labor::LaborParams;

const std::vector<Rational> kWindowWages = {Rational(11, 10), Rational(3, 2),
                                            Rational(19, 10)};
const std::vector<Rational> kLowMisreportCosts = {
    Rational(0), Rational(1, 4), Rational(1, 2), Rational(7, 10)};
const std::vector<Rational> kHighMisreportCosts = {Rational(76, 100),
                                                   Rational(1)};
const std::array<Rational, 2> kOtherPriors = {Rational(1, 10),
                                              Rational(9, 10)};

LaborParams Canonical(const Rational& prior_high) {
  LaborParams p;
  p.theta_low = 1;
  p.theta_high = 2;
  p.education = 1;
  p.wage = Rational(3, 2);
  p.misreport_cost = Rational(1, 2);
  p.prior_high = {prior_high, prior_high};
  return p;
}

std::string Flag(bool v) { return v ? "yes" : "no"; }

std::string Joined(const std::ostringstream& parts) {
  std::string s = parts.str();
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "; ") == 0) {
    s.resize(s.size() - 2);
  }
  return s;
}

// Each check returns one verdict per parameter point plus a readable trace.
struct Check {
  std::vector<bool> verdicts;
  std::string detail;

  bool passed() const {
    for (bool v : verdicts) {
      if (!v) return false;
    }
    return !verdicts.empty();
  }
};

Check SeparatingWindow(const ReproduceOptions& options,
                       const Rational& prior) {
  Check check;
  std::ostringstream detail;
  for (const Rational& w : kWindowWages) {
    LaborParams p = Canonical(prior);
    p.wage = w;
    const bool in_window = options.window(p).Contains(w);
    const labor::SeparatingReport r = labor::CheckSeparatingEquilibrium(p);
    check.verdicts.push_back(in_window && r.separating_is_bne &&
                             r.implements_scf && r.ir_satisfied);
    detail << "w=" << ToString(w) << ": in_window=" << Flag(in_window)
           << " bne=" << Flag(r.separating_is_bne)
           << " implements=" << Flag(r.implements_scf)
           << " ir_margin=" << ToString(r.ir_margin) << "; ";
  }
  check.detail = Joined(detail);
  return check;
}

Check UniqueHighReport(const std::vector<Rational>& costs,
                       const Rational& prior) {
  Check check;
  std::ostringstream detail;
  for (const Rational& c : costs) {
    LaborParams p = Canonical(prior);
    p.misreport_cost = c;
    const labor::DirectReport r = labor::CheckDirectMechanism(p);
    const labor::LaborScenario s = labor::BuildLaborScenario(p);
    const BayesianGame game = s.Direct().Game(s.utilities);
    std::size_t searched = 1;
    for (int i = 0; i < 2; ++i) {
      searched *= EnumeratePureStrategies(game.mechanism(), game.types(), i)
                      .size();
    }
    check.verdicts.push_back(!r.truthful_is_bne && searched == 16 &&
                             r.unique_bne_all_report_high);
    detail << "c_mis=" << ToString(c) << ": truthful_bne="
           << Flag(r.truthful_is_bne) << " profiles=" << searched
           << " bne_count=" << r.equilibria.size()
           << " unique_all_high=" << Flag(r.unique_bne_all_report_high)
           << "; ";
  }
  check.detail = Joined(detail);
  return check;
}

Check TruthfulAboveThreshold(const Rational& prior) {
  Check check;
  std::ostringstream detail;
  for (const Rational& c : kHighMisreportCosts) {
    LaborParams p = Canonical(prior);
    p.misreport_cost = c;
    const labor::LaborScenario s = labor::BuildLaborScenario(p);
    const bool truthful =
        IsTruthfullyImplementable(s.scf, s.types, s.costs, s.utilities)
            .truthful;
    check.verdicts.push_back(truthful);
    detail << "c_mis=" << ToString(c) << ": truthful_bne=" << Flag(truthful)
           << "; ";
  }
  check.detail = Joined(detail);
  return check;
}

using Cell = std::pair<Rational, Rational>;
using Table = std::array<std::array<Cell, 2>, 2>;

// Hand-substituted tables with rows and columns ordered (theta_L, theta_H).
std::array<Table, 4> SymbolicTables(const Rational& w, const Rational& c) {
  const Rational h = w / 2;
  const Rational z = 0;
  return {{
      {{{{{h, h}, {z, w}}}, {{{w, z}, {h, h}}}}},
      {{{{{h, h}, {z, w}}}, {{{w - c, z}, {h - c, h}}}}},
      {{{{{h, h}, {z, w - c}}}, {{{w, z}, {h, h - c}}}}},
      {{{{{h, h}, {z, w - c}}}, {{{w - c, z}, {h - c, h - c}}}}},
  }};
}

CriterionResult CaseMatricesCriterion() {
  const LaborParams p = Canonical(Rational(1, 2));
  const auto cases = labor::CaseMatrices(p);
  const auto expected = SymbolicTables(p.wage, p.misreport_cost);
  int mismatches = 0;
  std::ostringstream detail;
  for (int k = 0; k < 4; ++k) {
    for (int r = 0; r < 2; ++r) {
      for (int s = 0; s < 2; ++s) {
        const Cell got = {cases[k].game.Payoff({r, s}, 0),
                          cases[k].game.Payoff({r, s}, 1)};
        if (got != expected[k][r][s]) {
          ++mismatches;
          detail << "case " << k + 1 << " cell (" << r << "," << s
                 << ") got (" << ToString(got.first) << ", "
                 << ToString(got.second) << "); ";
        }
      }
    }
  }
  detail << "16 cells checked, " << mismatches << " mismatches; case 4 "
         << "diagonal (" << ToString(cases[3].game.Payoff({1, 1}, 0)) << ", "
         << ToString(cases[3].game.Payoff({1, 1}, 1)) << ")";
  return {5, "case_matrices", mismatches == 0, detail.str()};
}

CriterionResult ProofChainCriterion() {
  LaborParams p = Canonical(Rational(1, 2));
  p.misreport_cost = 0;
  const AuditReport audit = labor::AuditLabor(p);
  const ProofChain& c = audit.chain;
  const bool witness_ok = c.break_point && c.break_point->type == labor::kLow &&
                          c.break_point->report == labor::kHigh;
  std::ostringstream detail;
  detail << "vacuous=" << Flag(c.vacuous)
         << " equilibrium_with_costs=" << Flag(c.equilibrium_with_costs)
         << " action_restricted_with_costs="
         << Flag(c.action_restricted_with_costs)
         << " type_restricted_with_costs="
         << Flag(c.type_restricted_with_costs)
         << " truthful_cost_free=" << Flag(c.truthful_cost_free);
  if (c.break_point) {
    detail << " break=(agent " << c.break_point->agent + 1 << ", "
           << labor::TypeLabels()[c.break_point->type] << " reports "
           << labor::TypeLabels()[c.break_point->report]
           << ", gap " << ToString(c.break_point->gap) << ")";
  }
  const bool passed = !c.vacuous && c.equilibrium_with_costs &&
                      c.action_restricted_with_costs &&
                      c.type_restricted_with_costs && !c.truthful_cost_free &&
                      witness_ok;
  return {6, "proof_chain_break", passed, detail.str()};
}

CriterionResult ZeroCostCriterion(const ReproduceOptions& options) {
  int equilibria = 0;
  int violations = 0;
  for (int k = 0; k < options.random_instances; ++k) {
    const RandomInstance inst = MakeRandomInstance(options.seed + k);
    const BayesianGame game(inst.mechanism, inst.types, inst.utilities,
                            inst.costs);
    for (const StrategyProfile& s :
         FindAllPureBne(game, EquilibriumMode::kProfitBased)) {
      ++equilibria;
      const SocialChoiceFunction f =
          InducedScf(inst.mechanism, s, inst.types);
      if (!IsTruthfullyImplementable(f, inst.types, inst.costs,
                                     inst.utilities)
               .truthful) {
        ++violations;
      }
    }
  }
  std::ostringstream detail;
  detail << options.random_instances << " instances, " << equilibria
         << " implemented social choice functions, " << violations
         << " violations";
  return {7, "zero_cost_revelation", options.random_instances >= 200 &&
                                         violations == 0,
          detail.str()};
}

}  // namespace

std::vector<CriterionResult> RunCriteria(const ReproduceOptions& options) {
  const Rational half(1, 2);
  std::vector<CriterionResult> out;

  const Check c1 = SeparatingWindow(options, half);
  out.push_back({1, "separating_equilibrium", c1.passed(), c1.detail});
  const Check c2 = UniqueHighReport(kLowMisreportCosts, half);
  out.push_back({2, "unique_high_report", c2.passed(), c2.detail});
  const Check c3 = UniqueHighReport({Rational(0)}, half);
  out.push_back({3, "violation_at_zero_misreport_cost", c3.passed(),
                 c3.detail});
  const Check c4 = TruthfulAboveThreshold(half);
  out.push_back({4, "truthful_above_threshold", c4.passed(), c4.detail});
  out.push_back(CaseMatricesCriterion());
  out.push_back(ProofChainCriterion());
  out.push_back(ZeroCostCriterion(options));

  bool unchanged = true;
  std::ostringstream detail;
  for (const Rational& prior : kOtherPriors) {
    const std::array<std::vector<bool>, 4> verdicts = {
        SeparatingWindow(options, prior).verdicts,
        UniqueHighReport(kLowMisreportCosts, prior).verdicts,
        UniqueHighReport({Rational(0)}, prior).verdicts,
        TruthfulAboveThreshold(prior).verdicts};
    const std::array<std::vector<bool>, 4> base = {c1.verdicts, c2.verdicts,
                                                   c3.verdicts, c4.verdicts};
    detail << "prior_high=" << ToString(prior) << ":";
    for (int k = 0; k < 4; ++k) {
      const bool same = verdicts[k] == base[k];
      unchanged = unchanged && same;
      detail << " c" << k + 1 << (same ? "=same" : "=changed");
    }
    detail << "; ";
  }
  out.push_back({8, "prior_independence", unchanged, Joined(detail)});
  return out;
}

Json CriteriaToJson(const std::vector<CriterionResult>& results) {
  Json criteria = Json::array();
  bool all = true;
  for (const CriterionResult& r : results) {
    criteria.push_back(Json{{"id", r.id},
                            {"name", r.name},
                            {"passed", r.passed},
                            {"detail", r.detail}});
    all = all && r.passed;
  }
  return Json{{"criteria", std::move(criteria)}, {"all_passed", all}};
}

ReproduceOutcome Reproduce(const ReproduceOptions& options) {
  const std::string first = Render(CriteriaToJson(RunCriteria(options)));
  std::vector<CriterionResult> results = RunCriteria(options);
  const std::string second = Render(CriteriaToJson(results));
  results.push_back({9, "determinism", first == second,
                     first == second ? "two evaluations rendered identically"
                                     : "two evaluations differ"});

  ReproduceOutcome outcome;
  outcome.output = Render(CriteriaToJson(results));
  outcome.all_passed = true;
  for (const CriterionResult& r : results) {
    if (!r.passed) {
      outcome.all_passed = false;
      outcome.failures.push_back(std::to_string(r.id) + " " + r.name);
    }
  }
  return outcome;
}

}  // namespace revaudit
