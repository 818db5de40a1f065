#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "revaudit/game.h"
#include "revaudit/labor.h"
#include "revaudit/random_instances.h"

#include <string>
#include <vector>

namespace {

using namespace revaudit;

std::vector<std::string> Labels(std::initializer_list<const char*> xs) {
  return {xs.begin(), xs.end()};
}

}  // namespace

TEST_CASE("profile space enumerates lexicographically") {
  ProfileSpace space({2, 3});
  CHECK(space.count() == 6);
  CHECK(space.Decode(0) == Profile{0, 0});
  CHECK(space.Decode(1) == Profile{0, 1});
  CHECK(space.Decode(3) == Profile{1, 0});
  for (std::size_t k = 0; k < space.count(); ++k) {
    CHECK(space.Encode(space.Decode(k)) == k);
  }
  CHECK_FALSE(space.Contains({2, 0}));
  CHECK_FALSE(space.Contains({0}));
}

TEST_CASE("type space validation") {
  const auto lh = Labels({"L", "H"});
  CHECK_NOTHROW(TypeSpace({lh}, {{Rational(1, 3), Rational(2, 3)}}));
  CHECK_THROWS_AS(TypeSpace({lh}, {{Rational(1, 3), Rational(1, 3)}}),
                  DomainError);
  CHECK_THROWS_AS(TypeSpace({lh}, {{Rational(0), Rational(1)}}),
                  DomainError);
  CHECK_THROWS_AS(TypeSpace({Labels({"L", "L"})},
                            {{Rational(1, 2), Rational(1, 2)}}),
                  DomainError);
  CHECK_THROWS_AS(TypeSpace({{}}, {{}}), DomainError);
  CHECK_THROWS_AS(TypeSpace({lh}, {{Rational(1)}}), DomainError);
  CHECK_NOTHROW(TypeSpace({lh}, {{Rational(0), Rational(1)}},
                          PriorSupport::kAllowDegenerate));
}

TEST_CASE("joint prior examples") {
  const auto lh = Labels({"theta_L", "theta_H"});
  const TypeSpace uniform = TypeSpace::Uniform({lh, lh});
  const std::vector<std::string> lh_profile = {"theta_L", "theta_H"};
  CHECK(JointPrior(uniform, lh_profile) == Rational(1, 4));

  const TypeSpace skewed({lh, lh}, {{Rational(1, 4), Rational(3, 4)},
                                    {Rational(2, 3), Rational(1, 3)}});
  const std::vector<std::string> hl = {"theta_H", "theta_L"};
  CHECK(JointPrior(skewed, hl) == Rational(1, 2));
  CHECK(skewed.ConditionalPrior(0, {1, 0}) == Rational(2, 3));
  CHECK(skewed.ConditionalPrior(1, {1, 0}) == Rational(3, 4));

  const TypeSpace point({lh, lh}, {{Rational(0), Rational(1)},
                                   {Rational(1), Rational(0)}},
                        PriorSupport::kAllowDegenerate);
  for (std::size_t k = 0; k < point.profiles().count(); ++k) {
    const Profile p = point.profiles().Decode(k);
    CHECK(point.JointPrior(p) == (p == Profile{1, 0} ? 1 : 0));
  }
}

TEST_CASE("joint prior sums to one") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    RandomInstanceOptions options;
    options.num_agents = 1 + static_cast<int>(seed % 3);
    options.max_types = 3;
    const RandomInstance inst = MakeRandomInstance(seed, options);
    Rational total = 0;
    for (std::size_t k = 0; k < inst.types.profiles().count(); ++k) {
      total += inst.types.JointPrior(inst.types.profiles().Decode(k));
    }
    CHECK(total == 1);
  }
}

TEST_CASE("labor social choice function") {
  const labor::LaborScenario s = labor::BuildLaborScenario({});
  using V = std::vector<Rational>;
  const std::vector<std::string> hl = {"theta_H", "theta_L"};
  const std::vector<std::string> ll = {"theta_L", "theta_L"};
  const std::vector<std::string> lh = {"theta_L", "theta_H"};
  CHECK(EvaluateScf(s.scf, s.types, hl).payload == V{1, 0});
  CHECK(EvaluateScf(s.scf, s.types, ll).payload ==
        V{Rational(1, 2), Rational(1, 2)});
  CHECK(EvaluateScf(s.scf, s.types, lh).payload == V{0, 1});
  const std::vector<std::string> bad = {"theta_M", "theta_L"};
  CHECK_THROWS_AS(EvaluateScf(s.scf, s.types, bad), DomainError);

  // Swapping the agents' types swaps the payload.
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const auto& x = s.scf({a, b}).payload;
      const auto& y = s.scf({b, a}).payload;
      CHECK(x[0] == y[1]);
      CHECK(x[1] == y[0]);
    }
  }
}

TEST_CASE("profit examples") {
  const labor::LaborScenario s = labor::BuildLaborScenario({});
  CHECK(Profit(s.mechanism, s.types, 0, "agent1_hired", "e_H", "theta_H",
               s.utilities, s.costs) == 1);
  CHECK(Profit(s.mechanism, s.types, 0, "split", "0", "theta_L",
               s.utilities, s.costs) == Rational(3, 4));
  CHECK_THROWS_AS(Profit(s.mechanism, s.types, 0, "nobody", "0", "theta_L",
                         s.utilities, s.costs),
                  DomainError);
  CHECK_THROWS_AS(Profit(s.mechanism, s.types, 0, "split", "e_L", "theta_L",
                         s.utilities, s.costs),
                  DomainError);
}

TEST_CASE("profit equals utility under zero cost") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const RandomInstance inst = MakeRandomInstance(seed);
    const ActionCosts zero = ActionCosts::Zero(inst.mechanism, inst.types);
    for (int i = 0; i < inst.types.num_agents(); ++i) {
      for (int x = 0; x < static_cast<int>(inst.mechanism.outcomes().size());
           ++x) {
        for (int a = 0; a < inst.mechanism.num_actions(i); ++a) {
          for (int t = 0; t < inst.types.num_types(i); ++t) {
            CHECK(Profit(i, x, a, t, inst.utilities, zero) ==
                  inst.utilities(i, x, t));
          }
        }
      }
    }
  }
}

TEST_CASE("profit shifts with utility") {
  RandomInstanceOptions options;
  options.zero_costs = false;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const RandomInstance inst = MakeRandomInstance(seed, options);
    const Rational k(7, 5);
    const int agent = 0;
    const int type = 0;
    const UtilityTable shifted = UtilityTable::FromRule(
        inst.mechanism.outcomes(), inst.types, [&](int i, int x, int t) {
          return inst.utilities(i, x, t) + (i == agent && t == type ? k : 0);
        });
    for (int x = 0; x < static_cast<int>(inst.mechanism.outcomes().size());
         ++x) {
      for (int a = 0; a < inst.mechanism.num_actions(agent); ++a) {
        CHECK(Profit(agent, x, a, type, shifted, inst.costs.strategic) ==
              Profit(agent, x, a, type, inst.utilities, inst.costs.strategic) +
                  k);
      }
    }
  }
}

TEST_CASE("cost tables reject invalid entries") {
  using T = std::vector<std::vector<std::vector<Rational>>>;
  CHECK_THROWS_AS(ActionCosts(T{{{Rational(-1)}}}), DomainError);
  CHECK_THROWS_AS(MisreportCosts(T{{{Rational(1)}}}), DomainError);
  CHECK_THROWS_AS(MisreportCosts(T{{{0, Rational(-1)}, {0, 0}}}), DomainError);
  CHECK_NOTHROW(MisreportCosts(T{{{0, Rational(1)}, {0, 0}}}));
}

TEST_CASE("tables must be total and labels unique") {
  const OutcomeSet xs({{"a", {}}, {"b", {}}});
  CHECK_THROWS_AS(OutcomeSet({{"a", {}}, {"a", {}}}), DomainError);
  CHECK_THROWS_AS(Mechanism({{"s", "t"}}, xs, {0}), DomainError);
  CHECK_THROWS_AS(Mechanism({{"s", "t"}}, xs, {0, 2}), DomainError);
  CHECK_THROWS_AS(Mechanism({{}}, xs, {}), DomainError);
  CHECK_NOTHROW(Mechanism({{"s", "t"}}, xs, {0, 1}));
}
