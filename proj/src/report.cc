#include "revaudit/report.h"

#include <algorithm>

namespace revaudit {
namespace {

const Json& Field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ConfigError(key, "missing field");
  return *it;
}

bool Flag(const Json& doc, const char* key) {
  const Json& v = Field(doc, key);
  if (!v.is_boolean()) throw ConfigError(key, "expected a boolean");
  return v.get<bool>();
}

int AgentField(const Json& doc, int num_agents) {
  const Json& v = Field(doc, "agent");
  if (!v.is_number_integer() || v.get<int>() < 0 ||
      v.get<int>() >= num_agents) {
    throw ConfigError("agent", "expected an agent index");
  }
  return v.get<int>();
}

Json DeviationJson(const std::optional<Deviation>& d, const TypeSpace& types,
                   const std::vector<std::vector<std::string>>& actions) {
  if (!d) return nullptr;
  return Json{{"agent", d->agent},
              {"true_type", types.label(d->agent, d->type)},
              {"report", actions.at(d->agent).at(d->action)},
              {"gain", ToString(d->gain)}};
}

std::optional<Deviation> DeviationFromJson(
    const Json& doc, const TypeSpace& types,
    const std::vector<std::vector<std::string>>& actions) {
  if (doc.is_null()) return std::nullopt;
  Deviation d;
  d.agent = AgentField(doc, types.num_agents());
  d.type = types.IndexOf(d.agent, Field(doc, "true_type").get<std::string>());
  const auto& acts = actions.at(d.agent);
  const std::string action = Field(doc, "report").get<std::string>();
  auto it = std::find(acts.begin(), acts.end(), action);
  if (it == acts.end()) throw ConfigError("report", "unknown report " + action);
  d.action = static_cast<int>(it - acts.begin());
  d.gain = RationalFromJson(Field(doc, "gain"), "gain");
  return d;
}

std::vector<std::vector<std::string>> ReportLabels(const TypeSpace& types) {
  std::vector<std::vector<std::string>> out;
  for (int i = 0; i < types.num_agents(); ++i) out.push_back(types.types(i));
  return out;
}

Json ProfileLabels(const Profile& p,
                   const std::vector<std::vector<std::string>>& labels) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(labels[i][p[i]]);
  return out;
}

Json DominanceJson(const std::optional<DominantAction>& d,
                   const std::vector<std::string>& labels) {
  if (!d) return nullptr;
  return Json{{"action", labels[d->action]},
              {"kind", d->kind == Dominance::kStrict ? "strict" : "weak"}};
}

}  // namespace

Json StrategyProfileToJson(const StrategyProfile& profile,
                           const Mechanism& mechanism,
                           const TypeSpace& types) {
  Json out = Json::array();
  for (const PureStrategy& s : profile.strategies) {
    Json row = Json::object();
    for (std::size_t t = 0; t < s.choice.size(); ++t) {
      row[types.label(s.agent, static_cast<int>(t))] =
          mechanism.label(s.agent, s.choice[t]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

StrategyProfile StrategyProfileFromJson(const Json& doc,
                                        const Mechanism& mechanism,
                                        const TypeSpace& types) {
  if (!doc.is_array() || static_cast<int>(doc.size()) != types.num_agents()) {
    throw ConfigError("indirect_equilibrium", "expected one strategy per agent");
  }
  StrategyProfile profile;
  for (int i = 0; i < types.num_agents(); ++i) {
    PureStrategy s{i, std::vector<int>(types.num_types(i))};
    for (int t = 0; t < types.num_types(i); ++t) {
      const Json& a = Field(doc[i], types.label(i, t).c_str());
      s.choice[t] = mechanism.IndexOf(i, a.get<std::string>());
    }
    profile.strategies.push_back(std::move(s));
  }
  return profile;
}

Json AuditReportToJson(const AuditReport& report, const Mechanism& mechanism,
                       const TypeSpace& types) {
  const auto reports = ReportLabels(types);
  Json chain{
      {"vacuous", report.chain.vacuous},
      {"equilibrium_with_costs", report.chain.equilibrium_with_costs},
      {"action_restricted_with_costs",
       report.chain.action_restricted_with_costs},
      {"type_restricted_with_costs", report.chain.type_restricted_with_costs},
      {"truthful_cost_free", report.chain.truthful_cost_free},
      {"break_point", nullptr}};
  if (const auto& b = report.chain.break_point) {
    chain["break_point"] = Json{{"agent", b->agent},
                                {"true_type", types.label(b->agent, b->type)},
                                {"report", types.label(b->agent, b->report)},
                                {"gap", ToString(b->gap)}};
  }
  return Json{
      {"indirect_equilibrium",
       report.indirect_equilibrium
           ? StrategyProfileToJson(*report.indirect_equilibrium, mechanism,
                                   types)
           : Json(nullptr)},
      {"indirect_is_bne", report.indirect_is_bne},
      {"implements_scf", report.implements_scf},
      {"implemented", report.implemented},
      {"truthful_is_bne", report.truthful_is_bne},
      {"violation", report.violation},
      {"truthful_witness",
       DeviationJson(report.truthful_witness, types, reports)},
      {"proof_chain", std::move(chain)}};
}

AuditReport AuditReportFromJson(const Json& doc, const Mechanism& mechanism,
                                const TypeSpace& types) {
  if (!doc.is_object()) throw ConfigError("", "expected an object");
  AuditReport report;
  const Json& eq = Field(doc, "indirect_equilibrium");
  if (!eq.is_null()) {
    report.indirect_equilibrium = StrategyProfileFromJson(eq, mechanism, types);
  }
  report.indirect_is_bne = Flag(doc, "indirect_is_bne");
  report.implements_scf = Flag(doc, "implements_scf");
  report.implemented = Flag(doc, "implemented");
  report.truthful_is_bne = Flag(doc, "truthful_is_bne");
  report.violation = Flag(doc, "violation");
  report.truthful_witness = DeviationFromJson(Field(doc, "truthful_witness"),
                                              types, ReportLabels(types));
  const Json& c = Field(doc, "proof_chain");
  report.chain.vacuous = Flag(c, "vacuous");
  report.chain.equilibrium_with_costs = Flag(c, "equilibrium_with_costs");
  report.chain.action_restricted_with_costs =
      Flag(c, "action_restricted_with_costs");
  report.chain.type_restricted_with_costs =
      Flag(c, "type_restricted_with_costs");
  report.chain.truthful_cost_free = Flag(c, "truthful_cost_free");
  const Json& b = Field(c, "break_point");
  if (!b.is_null()) {
    ChainBreak brk;
    brk.agent = AgentField(b, types.num_agents());
    brk.type =
        types.IndexOf(brk.agent, Field(b, "true_type").get<std::string>());
    brk.report = types.IndexOf(brk.agent, Field(b, "report").get<std::string>());
    brk.gap = RationalFromJson(Field(b, "gap"), "gap");
    report.chain.break_point = brk;
  }
  return report;
}

Json NormalFormToJson(const NormalFormGame& game) {
  std::vector<std::vector<std::string>> labels;
  for (int i = 0; i < game.num_agents(); ++i) labels.push_back(game.actions(i));
  Json cells = Json::array();
  const ProfileSpace& space = game.profiles();
  for (std::size_t k = 0; k < space.count(); ++k) {
    const Profile p = space.Decode(k);
    Json payoffs = Json::array();
    for (const Rational& v : game.Payoffs(p)) payoffs.push_back(ToString(v));
    cells.push_back(Json{{"actions", ProfileLabels(p, labels)},
                         {"payoffs", std::move(payoffs)}});
  }
  return Json{{"actions", labels}, {"cells", std::move(cells)}};
}

Json SeparatingReportToJson(const labor::SeparatingReport& report) {
  const auto& types = labor::TypeLabels();
  const auto& bids = labor::BidLabels();
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    cases.push_back(Json{
        {"own_type", types[c.own_type]},
        {"opponent_type", types[c.opponent_type]},
        {"value_e_H", ToString(c.value_educated)},
        {"value_0", ToString(c.value_uneducated)},
        {"best", c.best ? Json(bids[*c.best]) : Json("tie")}});
  }
  Json witness = nullptr;
  if (report.witness) {
    witness = Json{{"agent", report.witness->agent},
                   {"true_type", types[report.witness->type]},
                   {"action", bids[report.witness->action]},
                   {"gain", ToString(report.witness->gain)}};
  }
  return Json{{"wage_window",
               {{"lower", ToString(report.window.lower)},
                {"upper", ToString(report.window.upper)},
                {"open", true}}},
              {"in_window", report.in_window},
              {"separating_is_bne", report.separating_is_bne},
              {"witness", std::move(witness)},
              {"implements_scf", report.implements_scf},
              {"ir_margin", ToString(report.ir_margin)},
              {"ir_satisfied", report.ir_satisfied},
              {"best_response_cases", std::move(cases)},
              {"notes", report.notes}};
}

Json DirectReportToJson(const labor::DirectReport& report) {
  const auto& types = labor::TypeLabels();
  const std::vector<std::vector<std::string>> labels = {types, types};
  auto profile_json = [&](const StrategyProfile& p) {
    Json out = Json::array();
    for (const auto& s : p.strategies) {
      Json row = Json::object();
      for (std::size_t t = 0; t < s.choice.size(); ++t) {
        row[types[t]] = types[s.choice[t]];
      }
      out.push_back(std::move(row));
    }
    return out;
  };
  Json equilibria = Json::array();
  for (const auto& p : report.equilibria) equilibria.push_back(profile_json(p));
  Json cases = Json::array();
  for (std::size_t k = 0; k < report.cases.size(); ++k) {
    const labor::CaseMatrix& c = report.cases[k];
    Json nash = Json::array();
    for (const auto& p : c.nash) nash.push_back(ProfileLabels(p, labels));
    cases.push_back(Json{
        {"case", k + 1},
        {"true_types", ProfileLabels(c.true_types, labels)},
        {"matrix", NormalFormToJson(c.game)},
        {"dominant", {DominanceJson(c.dominant[0], types),
                      DominanceJson(c.dominant[1], types)}},
        {"pure_nash", std::move(nash)}});
  }
  Json witness = nullptr;
  if (report.truthful_witness) {
    witness = Json{{"agent", report.truthful_witness->agent},
                   {"true_type", types[report.truthful_witness->type]},
                   {"report", types[report.truthful_witness->action]},
                   {"gain", ToString(report.truthful_witness->gain)}};
  }
  return Json{
      {"cmis_below_half_w", report.cmis_below_half_wage},
      {"truthful_is_bne", report.truthful_is_bne},
      {"truthful_witness", std::move(witness)},
      {"pure_bne", std::move(equilibria)},
      {"unique_bne_all_report_high", report.unique_bne_all_report_high},
      {"expost_prediction", report.expost_prediction
                                ? profile_json(*report.expost_prediction)
                                : Json(nullptr)},
      {"views_agree",
       report.views_agree ? Json(*report.views_agree) : Json(nullptr)},
      {"case_matrices", std::move(cases)},
      {"notes", report.notes}};
}

std::string Render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace revaudit
