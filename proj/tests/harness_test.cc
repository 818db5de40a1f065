#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "revaudit/analyze.h"
#include "revaudit/config.h"
#include "revaudit/matrices.h"
#include "revaudit/random_instances.h"
#include "revaudit/report.h"
#include "revaudit/reproduce.h"
#include "revaudit/sweep.h"

#include <cstdio>
#include <fstream>
#include <string>

namespace {

using namespace revaudit;

std::string Scenario(const char* name) {
  return std::string(SCENARIO_DIR) + "/" + name;
}

Json Canonical() {
  return Json{{"kind", "labor"}, {"theta_L", 1},     {"theta_H", 2},
              {"e_H", 1},        {"w", "3/2"},       {"c_mis", "1/2"}};
}

std::string WhereOf(const Json& doc) {
  try {
    ParseScenarioConfig(doc);
  } catch (const ConfigError& e) {
    return e.where();
  }
  return "<no error>";
}

std::string WriteTemp(const std::string& text) {
  char path[] = "/tmp/revaudit_testXXXXXX";
  const int fd = mkstemp(path);
  REQUIRE(fd >= 0);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("labor config parses") {
  const ScenarioConfig c = ParseScenarioConfig(Canonical());
  REQUIRE(c.is_labor());
  CHECK(c.labor() == labor::LaborParams{});
  CHECK(c.labor().wage == Rational(3, 2));

  Json doc = Canonical();
  doc["prior_high"] = Json::array({"1/10", "9/10"});
  doc["charge_education"] = false;
  const labor::LaborParams p = ParseScenarioConfig(doc).labor();
  CHECK(p.prior_high[0] == Rational(1, 10));
  CHECK(p.prior_high[1] == Rational(9, 10));
  CHECK_FALSE(p.charge_education);
  CHECK(ParseLaborParams(LaborParamsToJson(p)) == p);
}

TEST_CASE("config diagnostics name the field") {
  Json missing = Canonical();
  missing.erase("w");
  CHECK(WhereOf(missing) == "w");

  Json decimal = Canonical();
  decimal["w"] = 1.5;
  CHECK(WhereOf(decimal) == "w");

  Json text = Canonical();
  text["c_mis"] = "half";
  CHECK(WhereOf(text) == "c_mis");

  Json extra = Canonical();
  extra["bonus"] = 1;
  CHECK(WhereOf(extra) == "bonus");

  CHECK(WhereOf(Json{{"kind", "auction"}}) == "kind");
  CHECK(WhereOf(Json::array()) == "");
}

TEST_CASE("decimal strings are rejected") {
  CHECK_THROWS_AS(RationalFromJson(Json("1.5"), "w"), ConfigError);
  CHECK_THROWS_AS(RationalFromJson(Json(0.5), "w"), ConfigError);
  CHECK(RationalFromJson(Json("3/2"), "w") == Rational(3, 2));
  CHECK(RationalFromJson(Json(4), "w") == 4);
  CHECK(RationalFromJson(Json(-4), "w") == -4);
}

TEST_CASE("syntax errors report a position") {
  const std::string path = WriteTemp("{\n  \"kind\": \"labor\",\n  oops\n}\n");
  try {
    ReadJsonFile(path);
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  std::remove(path.c_str());
  CHECK_THROWS_AS(ReadJsonFile("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("generic config diagnostics") {
  Json doc = ReadJsonFile(Scenario("generic_labor.json"));
  Json partial = doc;
  partial["scf"].erase(3);
  try {
    ParseScenarioConfig(partial);
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.where() == "scf");
    CHECK(std::string(e.what()).find("theta_H, theta_H") != std::string::npos);
  }

  Json dup = doc;
  dup["outcome_function"][3]["actions"] = Json::array({"0", "0"});
  CHECK(WhereOf(dup) == "outcome_function[3]");

  Json label = doc;
  label["scf"][0]["types"][1] = "theta_M";
  CHECK(WhereOf(label) == "scf[0].types[1]");

  Json prior = doc;
  prior["agents"][1]["prior"] = Json::array({"1/2", "1/3"});
  CHECK(WhereOf(prior).rfind("agents", 0) == 0);

  Json util = doc;
  util["agents"][0]["utility"].erase("split");
  CHECK(WhereOf(util) == "agents[0].utility.split");
}

TEST_CASE("generic labor scenario matches the built-in model") {
  const ScenarioConfig c =
      ParseScenarioConfig(ReadJsonFile(Scenario("generic_labor.json")));
  REQUIRE_FALSE(c.is_labor());
  const GenericScenario& g = c.generic();
  const labor::LaborScenario s = labor::BuildLaborScenario({});
  CHECK(g.types == s.types);
  CHECK(g.mechanism == s.mechanism);
  CHECK(g.utilities == s.utilities);
  CHECK(g.costs == s.costs);
  CHECK(g.scf == s.scf);
  REQUIRE(g.profile);
  CHECK(*g.profile == s.separating);

  const AnalyzeResult generic = RunScenario(c);
  const AnalyzeResult builtin =
      RunScenario(ParseScenarioConfig(Canonical()));
  CHECK(generic.violation);
  CHECK(generic.report["audit"] == builtin.report["audit"]);
}

TEST_CASE("analyze exit codes") {
  const AnalyzeResult canonical =
      RunScenario(ParseScenarioConfig(Canonical()));
  CHECK(canonical.violation);
  CHECK(canonical.exit_code() == kExitViolation);
  CHECK(canonical.report["violation"] == true);

  const AnalyzeResult zero = RunScenario(
      ParseScenarioConfig(ReadJsonFile(Scenario("labor_zero_cost.json"))));
  CHECK_FALSE(zero.violation);
  CHECK(zero.exit_code() == kExitOk);

  CHECK_THROWS_WITH_AS(
      ParseScenarioConfig(ReadJsonFile(Scenario("labor_invalid.json"))),
      "theta_H must be greater than theta_L", ConfigError);

  AnalyzeOptions options;
  options.prior_high = Rational(9, 10);
  const AnalyzeResult skewed =
      RunScenario(ParseScenarioConfig(Canonical()), options);
  CHECK(skewed.report["params"]["prior_high"][0] == "9/10");
  CHECK(skewed.violation);

  const AnalyzeResult generic = RunScenario(
      ParseScenarioConfig(ReadJsonFile(Scenario("generic_coordination.json"))),
      options);
  CHECK(generic.warnings.size() == 1);
  CHECK_FALSE(generic.violation);
  CHECK(generic.report["profile_searched"] == true);
}

TEST_CASE("analyze output is deterministic") {
  const ScenarioConfig c = ParseScenarioConfig(Canonical());
  CHECK(Render(RunScenario(c).report) == Render(RunScenario(c).report));
}

TEST_CASE("audit reports round trip") {
  int checked = 0;
  RandomInstanceOptions options;
  options.zero_costs = false;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const RandomInstance inst = MakeRandomInstance(seed, options);
    const BayesianGame g(inst.mechanism, inst.types, inst.utilities,
                         inst.costs);
    for (const auto& s : FindAllPureBne(g, EquilibriumMode::kProfitBased)) {
      const auto f = InducedScf(inst.mechanism, s, inst.types);
      const AuditReport r = AuditRevelationPrinciple(
          inst.mechanism, s, f, inst.types, inst.utilities, inst.costs);
      const Json doc = AuditReportToJson(r, inst.mechanism, inst.types);
      const Json reparsed = Json::parse(Render(doc));
      CHECK(AuditReportFromJson(reparsed, inst.mechanism, inst.types) == r);
      ++checked;
    }
    // Search mode, including scenarios nobody implements.
    const StrategyProfile constant = [&] {
      StrategyProfile p;
      for (int i = 0; i < inst.types.num_agents(); ++i) {
        p.strategies.push_back({i, std::vector<int>(inst.types.num_types(i))});
      }
      return p;
    }();
    const AuditReport searched = AuditRevelationPrinciple(
        inst.mechanism, InducedScf(inst.mechanism, constant, inst.types),
        inst.types, inst.utilities, inst.costs);
    CHECK(AuditReportFromJson(
              AuditReportToJson(searched, inst.mechanism, inst.types),
              inst.mechanism, inst.types) == searched);
  }
  for (int k = 0; k <= 4; ++k) {
    labor::LaborParams p;
    p.misreport_cost = Rational(k, 4);
    const labor::LaborScenario s = labor::BuildLaborScenario(p);
    const AuditReport r = labor::AuditLabor(p);
    CHECK(AuditReportFromJson(AuditReportToJson(r, s.mechanism, s.types),
                              s.mechanism, s.types) == r);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("sweep examples") {
  const SweepGrid grid =
      ParseSweepGrid(ReadJsonFile(Scenario("sweep_grid.json")));
  const auto rows = RunSweep(grid);
  REQUIRE(rows.size() == 9);
  auto at = [&](Rational w, Rational c) {
    for (const auto& r : rows) {
      if (r.wage == w && r.misreport_cost == c) return r;
    }
    FAIL("missing cell");
    return SweepRow{};
  };
  CHECK(at(Rational(3, 2), 0).violation == true);
  CHECK(at(Rational(1, 2), 0).in_window == false);
  CHECK(at(Rational(1, 2), 0).violation == false);
  CHECK(at(Rational(3, 2), 1).truthful_is_bne == true);
  CHECK(at(Rational(3, 2), 1).violation == false);

  // Lexicographic over the input lists.
  CHECK(rows[0].wage == Rational(1, 2));
  CHECK(rows[0].misreport_cost == 0);
  CHECK(rows[1].misreport_cost == Rational(1, 2));
  CHECK(rows[3].wage == Rational(3, 2));

  for (const auto& r : rows) {
    CHECK(r == EvaluateCell(grid.fixed, r.wage, r.misreport_cost));
  }
}

TEST_CASE("sweep records cell errors without aborting") {
  SweepGrid grid;
  grid.wages = {Rational(3, 2)};
  grid.misreport_costs = {Rational(-1), Rational(0)};
  const auto rows = RunSweep(grid);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].error == "c_mis must be nonnegative");
  CHECK_FALSE(rows[0].violation);
  CHECK(rows[1].error.empty());
  CHECK(rows[1].violation == true);
  const std::string csv = SweepToCsv(rows);
  CHECK(csv ==
        "w,c_mis,in_window,separating_is_bne,truthful_is_bne,violation,error\n"
        "3/2,-1,,,,,\"c_mis must be nonnegative\"\n"
        "3/2,0,true,true,false,true,\n");
  CHECK(SweepToJson(rows)["rows"][0]["violation"].is_null());
}

TEST_CASE("sweep grid diagnostics") {
  Json doc = ReadJsonFile(Scenario("sweep_grid.json"));
  Json empty = doc;
  empty["w_values"] = Json::array();
  CHECK_THROWS_AS(ParseSweepGrid(empty), ConfigError);
  Json bad = doc;
  bad["cmis_values"][1] = "0.5";
  try {
    ParseSweepGrid(bad);
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.where() == "cmis_values[1]");
  }
}

TEST_CASE("rendered matrices") {
  const std::string md = RenderMatrices({});
  CHECK(md.find("## Case 1: agent 1 is theta_H, agent 2 is theta_H") !=
        std::string::npos);
  CHECK(md.find("| theta_L | (3/4, 3/4) | (0, 3/2) |") != std::string::npos);
  CHECK(md.find("| theta_H | (1, 0) | (1/4, 1/4) |") != std::string::npos);
  CHECK(md.find("0.") == std::string::npos);
  CHECK(md.find("Pure Nash equilibria: (theta_H, theta_H)") !=
        std::string::npos);

  labor::LaborParams zero;
  zero.misreport_cost = 0;
  const std::string z = RenderMatrices(zero);
  const auto case_block = [&](int k) {
    const auto start = z.find("## Case " + std::to_string(k));
    const auto table = z.find("| agent 1", start);
    return z.substr(table, z.find("\n\n", table) - table);
  };
  CHECK(case_block(2) == case_block(1));
}

TEST_CASE("reproduce passes on canonical parameters") {
  const ReproduceOutcome out = Reproduce();
  CHECK(out.all_passed);
  CHECK(out.failures.empty());
  const Json doc = Json::parse(out.output);
  REQUIRE(doc["criteria"].size() == 9);
  for (int k = 0; k < 9; ++k) {
    CHECK(doc["criteria"][k]["id"] == k + 1);
    CHECK(doc["criteria"][k]["passed"] == true);
  }
  CHECK(Reproduce().output == out.output);
}

TEST_CASE("a patched window bound fails the named criterion") {
  ReproduceOptions options;
  options.window = [](const labor::LaborParams& p) {
    labor::OpenInterval w = labor::WageWindow(p);
    w.upper = Rational(3, 2);
    return w;
  };
  const ReproduceOutcome out = Reproduce(options);
  CHECK_FALSE(out.all_passed);
  REQUIRE(out.failures.size() == 1);
  CHECK(out.failures[0] == "1 separating_equilibrium");
}

TEST_CASE("too few random instances fails the regression criterion") {
  ReproduceOptions options;
  options.random_instances = 10;
  const auto results = RunCriteria(options);
  CHECK_FALSE(results[6].passed);
}
