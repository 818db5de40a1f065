#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "revaudit/equilibrium.h"
#include "revaudit/labor.h"
#include "revaudit/random_instances.h"

#include <vector>

namespace {

using namespace revaudit;
using labor::kEducated;
using labor::kHigh;
using labor::kLow;
using labor::kNoEducation;

constexpr auto kProfit = EquilibriumMode::kProfitBased;
constexpr auto kUtility = EquilibriumMode::kUtilityBased;

StrategyProfile Constant(int n_agents, int n_types, int action) {
  StrategyProfile p;
  for (int i = 0; i < n_agents; ++i) {
    p.strategies.push_back({i, std::vector<int>(n_types, action)});
  }
  return p;
}

// Interim payoff computed straight from the definition: weight every
// opponent type profile by the product of the opponents' marginals.
Rational OracleInterim(const BayesianGame& g, const StrategyProfile& s,
                       int agent, int type, int action, EquilibriumMode mode) {
  const TypeSpace& ts = g.types();
  Rational total = 0;
  for (std::size_t k = 0; k < ts.profiles().count(); ++k) {
    const Profile theta = ts.profiles().Decode(k);
    if (theta[agent] != type) continue;
    Rational weight = 1;
    Profile actions(theta.size());
    for (int j = 0; j < ts.num_agents(); ++j) {
      actions[j] = s.strategies[j].choice[theta[j]];
      if (j != agent) weight *= ts.prior(j, theta[j]);
    }
    actions[agent] = action;
    Rational value =
        g.utilities()(agent, g.mechanism().OutcomeIndex(actions), type);
    if (mode == kProfit) value -= g.costs()(agent, action, type);
    total += weight * value;
  }
  return total;
}

Rational ExAnte(const BayesianGame& g, const StrategyProfile& s, int agent,
                const std::vector<int>& choice, EquilibriumMode mode) {
  Rational total = 0;
  for (int t = 0; t < g.types().num_types(agent); ++t) {
    total += g.types().prior(agent, t) *
             OracleInterim(g, s, agent, t, choice[t], mode);
  }
  return total;
}

// Equilibrium check against every full alternative strategy of each agent.
bool OracleIsBne(const BayesianGame& g, const StrategyProfile& s,
                 EquilibriumMode mode) {
  for (int i = 0; i < g.num_agents(); ++i) {
    const int n_types = g.types().num_types(i);
    const int n_actions = g.mechanism().num_actions(i);
    const Rational base = ExAnte(g, s, i, s.strategies[i].choice, mode);
    std::vector<int> alt(n_types, 0);
    while (true) {
      if (ExAnte(g, s, i, alt, mode) > base) return false;
      int pos = n_types - 1;
      while (pos >= 0 && ++alt[pos] == n_actions) alt[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return true;
}

std::vector<StrategyProfile> AllProfiles(const BayesianGame& g) {
  std::vector<StrategyProfile> out = {StrategyProfile{}};
  for (int i = 0; i < g.num_agents(); ++i) {
    std::vector<StrategyProfile> next;
    for (const auto& partial : out) {
      for (const auto& s :
           EnumeratePureStrategies(g.mechanism(), g.types(), i)) {
        StrategyProfile p = partial;
        p.strategies.push_back(s);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

BayesianGame InstanceGame(const RandomInstance& inst) {
  return BayesianGame(inst.mechanism, inst.types, inst.utilities, inst.costs);
}

}  // namespace

TEST_CASE("strategy enumeration") {
  const labor::LaborScenario s = labor::BuildLaborScenario({});
  const auto strategies = EnumeratePureStrategies(s.mechanism, s.types, 0);
  REQUIRE(strategies.size() == 4);
  CHECK(strategies[0].choice == std::vector<int>{0, 0});
  CHECK(strategies[1].choice == std::vector<int>{0, 1});
  CHECK(strategies[3].choice == std::vector<int>{1, 1});
  CHECK(AllProfiles(s.IndirectGame()).size() == 16);

  const TypeSpace one = TypeSpace::Uniform({{"only"}});
  const Mechanism three({{"a", "b", "c"}}, OutcomeSet(std::vector<Outcome>{{"x", {}}}), {0, 0, 0});
  CHECK(EnumeratePureStrategies(three, one, 0).size() == 3);

  const TypeSpace many = TypeSpace::Uniform(
      {{"t0", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9"}});
  CHECK_THROWS_AS(EnumeratePureStrategies(three, many, 0, 1000),
                  SearchSpaceTooLarge);
  CHECK(EnumeratePureStrategies(three, many, 0, 59049).size() == 59049);
}

TEST_CASE("interim payoffs in the labor game") {
  const labor::LaborScenario s = labor::BuildLaborScenario({});
  const BayesianGame g = s.IndirectGame();
  const StrategyProfile sep = labor::SeparatingProfile();
  CHECK(InterimExpectedPayoff(g, sep, 0, kHigh, kEducated, kProfit) ==
        Rational(5, 8));
  CHECK(InterimExpectedPayoff(g, sep, 0, kLow, kNoEducation, kProfit) ==
        Rational(3, 8));
  CHECK(InterimExpectedPayoff(g, sep, 0, kLow, std::nullopt, kProfit) ==
        Rational(3, 8));
  CHECK(InterimExpectedPayoff(g, sep, 0, kHigh, kEducated, kUtility) ==
        Rational(9, 8));
}

TEST_CASE("point-mass opponent prior gives the ex-post profit") {
  const labor::LaborScenario s = labor::BuildLaborScenario({});
  const TypeSpace point({labor::TypeLabels(), labor::TypeLabels()},
                        {{Rational(1, 2), Rational(1, 2)},
                         {Rational(1), Rational(0)}},
                        PriorSupport::kAllowDegenerate);
  const BayesianGame g(s.mechanism, point, s.utilities, s.costs);
  CHECK(InterimExpectedPayoff(g, labor::SeparatingProfile(), 0, kHigh,
                              kEducated, kProfit) == 1);
}

TEST_CASE("labor equilibrium verdicts") {
  const labor::LaborScenario s = labor::BuildLaborScenario({});
  const BayesianGame g = s.IndirectGame();
  CHECK(IsBayesianNash(g, labor::SeparatingProfile(), kProfit).is_equilibrium);

  const BneVerdict v = IsBayesianNash(g, Constant(2, 2, kNoEducation), kProfit);
  CHECK_FALSE(v.is_equilibrium);
  REQUIRE(v.witness);
  CHECK(v.witness->agent == 0);
  CHECK(v.witness->type == kHigh);
  CHECK(v.witness->action == kEducated);
  CHECK(v.witness->gain == Rational(1, 4));

  const auto all = FindAllPureBne(g, kProfit);
  CHECK(std::find(all.begin(), all.end(), labor::SeparatingProfile()) !=
        all.end());
}

TEST_CASE("ties are weak equilibria") {
  const TypeSpace one = TypeSpace::Uniform({{"only"}});
  const OutcomeSet xs({{"x", {}}, {"y", {}}});
  const Mechanism m({{"a", "b"}}, xs, {0, 1});
  const UtilityTable u({{{Rational(1)}, {Rational(1)}}});
  const BayesianGame g(m, one, u, ActionCosts::Zero(m, one));
  CHECK(FindAllPureBne(g, kProfit).size() == 2);
}

TEST_CASE("implementation of a social choice function") {
  const labor::LaborScenario s = labor::BuildLaborScenario({});
  CHECK(ImplementsScf(s.mechanism, labor::SeparatingProfile(), s.scf,
                      s.types));
  CHECK_FALSE(ImplementsScf(s.mechanism, Constant(2, 2, kNoEducation), s.scf,
                            s.types));
  CHECK(s.mechanism(Constant(2, 2, kNoEducation).ActionsAt({kHigh, kLow}))
            .label == "split");

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const RandomInstance inst = MakeRandomInstance(seed);
    for (const auto& p : AllProfiles(InstanceGame(inst))) {
      CHECK(ImplementsScf(inst.mechanism, p,
                          InducedScf(inst.mechanism, p, inst.types),
                          inst.types));
    }
  }
}

TEST_CASE("one-shot deviations agree with full strategy deviations") {
  RandomInstanceOptions options;
  options.zero_costs = false;
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const RandomInstance inst = MakeRandomInstance(seed, options);
    const BayesianGame g = InstanceGame(inst);
    for (const auto& p : AllProfiles(g)) {
      for (EquilibriumMode mode : {kProfit, kUtility}) {
        CHECK(IsBayesianNash(g, p, mode).is_equilibrium ==
              OracleIsBne(g, p, mode));
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("interim payoff matches the definition") {
  RandomInstanceOptions options;
  options.zero_costs = false;
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const RandomInstance inst = MakeRandomInstance(seed, options);
    const BayesianGame g = InstanceGame(inst);
    for (const auto& p : AllProfiles(g)) {
      for (int i = 0; i < g.num_agents(); ++i) {
        for (int t = 0; t < inst.types.num_types(i); ++t) {
          for (int a = 0; a < inst.mechanism.num_actions(i); ++a) {
            CHECK(InterimExpectedPayoff(g, p, i, t, a, kProfit) ==
                  OracleInterim(g, p, i, t, a, kProfit));
          }
        }
      }
    }
  }
}

TEST_CASE("witness is the largest gain") {
  RandomInstanceOptions options;
  options.zero_costs = false;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const RandomInstance inst = MakeRandomInstance(seed, options);
    const BayesianGame g = InstanceGame(inst);
    for (const auto& p : AllProfiles(g)) {
      const BneVerdict v = IsBayesianNash(g, p, kProfit);
      CHECK(v.is_equilibrium == !v.witness.has_value());
      if (!v.witness) continue;
      std::optional<Deviation> best;
      for (int i = 0; i < g.num_agents(); ++i) {
        for (int t = 0; t < inst.types.num_types(i); ++t) {
          const Rational here = OracleInterim(
              g, p, i, t, p.strategies[i].choice[t], kProfit);
          for (int a = 0; a < inst.mechanism.num_actions(i); ++a) {
            const Rational gain =
                OracleInterim(g, p, i, t, a, kProfit) - here;
            if (gain > 0 && (!best || gain > best->gain)) {
              best = Deviation{i, t, a, gain};
            }
          }
        }
      }
      CHECK(v.witness == best);
    }
  }
}

TEST_CASE("modes agree when costs are zero") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const RandomInstance inst = MakeRandomInstance(seed);
    const BayesianGame g = InstanceGame(inst);
    CHECK(FindAllPureBne(g, kProfit) == FindAllPureBne(g, kUtility));
  }
}

TEST_CASE("enumeration is deterministic") {
  RandomInstanceOptions options;
  options.zero_costs = false;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const BayesianGame a = InstanceGame(MakeRandomInstance(seed, options));
    const BayesianGame b = InstanceGame(MakeRandomInstance(seed, options));
    CHECK(FindAllPureBne(a, kProfit) == FindAllPureBne(b, kProfit));
  }
}

TEST_CASE("constant-payoff game") {
  const NormalFormGame nf({{"a", "b"}, {"c", "d"}},
                          std::vector<std::vector<Rational>>(4, {1, 1}));
  for (int i = 0; i < 2; ++i) {
    const auto d = DominantStrategy(nf, i);
    REQUIRE(d);
    CHECK(d->kind == Dominance::kWeak);
  }
  CHECK(FindPureNash(nf).size() == 4);
}

TEST_CASE("prisoner's dilemma") {
  // Actions: cooperate, defect.
  const NormalFormGame nf({{"C", "D"}, {"C", "D"}},
                          {{3, 3}, {0, 5}, {5, 0}, {1, 1}});
  const auto d = DominantStrategy(nf, 0);
  REQUIRE(d);
  CHECK(d->action == 1);
  CHECK(d->kind == Dominance::kStrict);
  CHECK(FindPureNash(nf) == std::vector<Profile>{{1, 1}});
}

TEST_CASE("matching pennies has no pure equilibrium") {
  const NormalFormGame nf({{"H", "T"}, {"H", "T"}},
                          {{1, -1}, {-1, 1}, {-1, 1}, {1, -1}});
  CHECK_FALSE(DominantStrategy(nf, 0));
  CHECK(FindPureNash(nf).empty());
}

TEST_CASE("ex-post game of the indirect labor mechanism") {
  const labor::LaborScenario s = labor::BuildLaborScenario({});
  const NormalFormGame nf =
      ExpostNormalForm(s.IndirectGame(), {kHigh, kLow}, kProfit);
  CHECK(nf.Payoff({kEducated, kNoEducation}, 0) == 1);
  CHECK(nf.Payoff({kEducated, kNoEducation}, 1) == 0);
  CHECK(nf.Payoff({kEducated, kEducated}, 1) == Rational(-1, 4));
  CHECK(nf.Payoff({kNoEducation, kNoEducation}, 0) == Rational(3, 4));
}
