#include "revaudit/config.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace revaudit {
namespace {

std::string Join(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

std::string Index(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

void RejectUnknownKeys(const Json& obj, const std::set<std::string>& allowed,
                       const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError(Join(where, key), "unknown field");
    }
  }
}

const Json& Require(const Json& obj, const std::string& key,
                    const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(Join(where, key), "missing field");
  return *it;
}

const Json& RequireArray(const Json& obj, const std::string& key,
                         const std::string& where) {
  const Json& v = Require(obj, key, where);
  if (!v.is_array() || v.empty()) {
    throw ConfigError(Join(where, key), "expected a nonempty array");
  }
  return v;
}

std::string RequireString(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ConfigError(where, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> StringList(const Json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) {
    throw ConfigError(where, "expected a nonempty array of strings");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(RequireString(v[i], Index(where, i)));
  }
  return out;
}

std::vector<Rational> RationalList(const Json& v, std::size_t expected,
                                   const std::string& where) {
  if (!v.is_array() || v.size() != expected) {
    throw ConfigError(where, "expected an array of " +
                                 std::to_string(expected) + " rationals");
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(RationalFromJson(v[i], Index(where, i)));
  }
  return out;
}

// Runs `fn`, turning model-level DomainErrors into ConfigErrors at `where`.
template <typename Fn>
auto Checked(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const DomainError& e) {
    throw ConfigError(where, e.what());
  }
}

GenericScenario ParseGeneric(const Json& doc) {
  RejectUnknownKeys(doc,
                    {"kind", "agents", "outcomes", "outcome_function", "scf",
                     "profile"},
                    "");
  const Json& agents = RequireArray(doc, "agents", "");

  // Types, priors and actions.
  std::vector<std::vector<std::string>> type_labels;
  std::vector<std::vector<Rational>> priors;
  std::vector<std::vector<std::string>> action_labels;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string at = Index("agents", i);
    const Json& a = agents[i];
    if (!a.is_object()) throw ConfigError(at, "expected an object");
    RejectUnknownKeys(a,
                      {"types", "prior", "actions", "utility",
                       "strategic_cost", "misreport_cost"},
                      at);
    type_labels.push_back(StringList(Require(a, "types", at), at + ".types"));
    const std::size_t n = type_labels.back().size();
    if (a.contains("prior")) {
      priors.push_back(RationalList(a["prior"], n, at + ".prior"));
    } else {
      priors.emplace_back(n, Rational(1, static_cast<long>(n)));
    }
    action_labels.push_back(
        StringList(Require(a, "actions", at), at + ".actions"));
  }
  TypeSpace types = Checked("agents", [&] {
    return TypeSpace(type_labels, priors);
  });

  // Outcomes.
  const Json& outcomes_json = RequireArray(doc, "outcomes", "");
  std::vector<Outcome> outcome_list;
  for (std::size_t k = 0; k < outcomes_json.size(); ++k) {
    const std::string at = Index("outcomes", k);
    const Json& o = outcomes_json[k];
    if (!o.is_object()) throw ConfigError(at, "expected an object");
    RejectUnknownKeys(o, {"label", "payload"}, at);
    Outcome outcome{RequireString(Require(o, "label", at), at + ".label"), {}};
    if (o.contains("payload")) {
      const Json& p = o["payload"];
      if (!p.is_array()) throw ConfigError(at + ".payload", "expected an array");
      outcome.payload = RationalList(p, p.size(), at + ".payload");
    }
    outcome_list.push_back(std::move(outcome));
  }
  OutcomeSet outcomes =
      Checked("outcomes", [&] { return OutcomeSet(outcome_list); });

  // Outcome function and social choice function, both total.
  auto read_table = [&](const std::string& key, const std::string& profile_key,
                        const std::vector<std::vector<std::string>>& labels) {
    std::vector<int> sizes;
    for (const auto& l : labels) sizes.push_back(static_cast<int>(l.size()));
    const ProfileSpace space(sizes);
    std::vector<int> table(space.count(), -1);
    const Json& rows = RequireArray(doc, key, "");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string at = Index(key, r);
      RejectUnknownKeys(rows[r], {profile_key, "outcome"}, at);
      const auto keys = StringList(Require(rows[r], profile_key, at),
                                   at + "." + profile_key);
      if (keys.size() != labels.size()) {
        throw ConfigError(at + "." + profile_key,
                          "expected one entry per agent");
      }
      Profile p;
      for (std::size_t i = 0; i < keys.size(); ++i) {
        auto it = std::find(labels[i].begin(), labels[i].end(), keys[i]);
        if (it == labels[i].end()) {
          throw ConfigError(Index(at + "." + profile_key, i),
                            "unknown label \"" + keys[i] + "\"");
        }
        p.push_back(static_cast<int>(it - labels[i].begin()));
      }
      const std::size_t idx = space.Encode(p);
      if (table[idx] != -1) throw ConfigError(at, "duplicate profile");
      table[idx] = Checked(at + ".outcome", [&] {
        return outcomes.IndexOf(
            RequireString(Require(rows[r], "outcome", at), at + ".outcome"));
      });
    }
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
      if (table[idx] == -1) {
        std::string missing;
        const Profile p = space.Decode(idx);
        for (std::size_t i = 0; i < p.size(); ++i) {
          missing += (i ? ", " : "") + labels[i][p[i]];
        }
        throw ConfigError(key, "not total: no outcome for (" + missing + ")");
      }
    }
    return table;
  };
  Mechanism mechanism = Checked("outcome_function", [&] {
    return Mechanism(action_labels, outcomes,
                     read_table("outcome_function", "actions", action_labels));
  });
  SocialChoiceFunction scf = Checked("scf", [&] {
    return SocialChoiceFunction(types.profiles(), outcomes,
                                read_table("scf", "types", type_labels));
  });

  // Utilities and costs.
  std::vector<std::vector<std::vector<Rational>>> utility(agents.size());
  std::vector<std::vector<std::vector<Rational>>> strategic(agents.size());
  std::vector<std::vector<std::vector<Rational>>> misreport(agents.size());
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string at = Index("agents", i);
    const Json& a = agents[i];
    const std::size_t n_types = type_labels[i].size();

    const Json& u = Require(a, "utility", at);
    if (!u.is_object()) throw ConfigError(at + ".utility", "expected an object");
    for (const auto& [label, _] : u.items()) {
      Checked(at + ".utility." + label, [&] { return outcomes.IndexOf(label); });
    }
    for (const Outcome& o : outcomes) {
      const std::string uat = at + ".utility." + o.label;
      if (!u.contains(o.label)) throw ConfigError(uat, "missing field");
      utility[i].push_back(RationalList(u[o.label], n_types, uat));
    }

    const Json sc = a.value("strategic_cost", Json::object());
    if (!sc.is_object()) {
      throw ConfigError(at + ".strategic_cost", "expected an object");
    }
    for (const auto& [label, _] : sc.items()) {
      if (std::find(action_labels[i].begin(), action_labels[i].end(), label) ==
          action_labels[i].end()) {
        throw ConfigError(at + ".strategic_cost." + label, "unknown action");
      }
    }
    for (const auto& action : action_labels[i]) {
      strategic[i].push_back(
          sc.contains(action)
              ? RationalList(sc[action], n_types,
                             at + ".strategic_cost." + action)
              : std::vector<Rational>(n_types));
    }

    misreport[i].assign(n_types, std::vector<Rational>(n_types));
    const Json mc = a.value("misreport_cost", Json::object());
    if (!mc.is_object()) {
      throw ConfigError(at + ".misreport_cost", "expected an object");
    }
    for (const auto& [truth, row] : mc.items()) {
      const std::string mat = at + ".misreport_cost." + truth;
      const int t = Checked(mat, [&] { return types.IndexOf(static_cast<int>(i), truth); });
      if (!row.is_object()) throw ConfigError(mat, "expected an object");
      for (const auto& [report, value] : row.items()) {
        const int r = Checked(mat + "." + report, [&] {
          return types.IndexOf(static_cast<int>(i), report);
        });
        misreport[i][t][r] = RationalFromJson(value, mat + "." + report);
      }
    }
  }
  UtilityTable utilities(std::move(utility));
  CostModel costs = Checked("agents", [&] {
    return CostModel{ActionCosts(std::move(strategic)),
                     MisreportCosts(std::move(misreport))};
  });

  std::optional<StrategyProfile> profile;
  if (doc.contains("profile")) {
    const Json& p = doc["profile"];
    if (!p.is_array() || p.size() != agents.size()) {
      throw ConfigError("profile", "expected one strategy per agent");
    }
    StrategyProfile sp;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::string at = Index("profile", i);
      if (!p[i].is_object()) throw ConfigError(at, "expected an object");
      PureStrategy s{static_cast<int>(i),
                     std::vector<int>(type_labels[i].size(), -1)};
      for (const auto& [type, action] : p[i].items()) {
        const int t = Checked(at + "." + type, [&] {
          return types.IndexOf(static_cast<int>(i), type);
        });
        s.choice[t] = Checked(at + "." + type, [&] {
          return mechanism.IndexOf(static_cast<int>(i),
                                   RequireString(action, at + "." + type));
        });
      }
      for (std::size_t t = 0; t < s.choice.size(); ++t) {
        if (s.choice[t] == -1) {
          throw ConfigError(at + "." + type_labels[i][t], "missing field");
        }
      }
      sp.strategies.push_back(std::move(s));
    }
    profile = std::move(sp);
  }

  return GenericScenario{std::move(types),     std::move(mechanism),
                         std::move(utilities), std::move(costs),
                         std::move(scf),       std::move(profile)};
}

}  // namespace

Rational RationalFromJson(const Json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return Rational(BigInt(value.dump()));
  }
  if (value.is_number_float()) {
    throw ConfigError(where, "decimal numbers are not accepted; write p/q");
  }
  if (!value.is_string()) {
    throw ConfigError(where, "expected a rational such as \"3/2\"");
  }
  try {
    return ParseRational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where, e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ConfigError(path, e.what());
  }
}

labor::LaborParams ParseLaborParams(const Json& doc, const std::string& where) {
  if (!doc.is_object()) throw ConfigError(where, "expected an object");
  labor::LaborParams p;
  p.theta_low = RationalFromJson(Require(doc, "theta_L", where),
                                 Join(where, "theta_L"));
  p.theta_high = RationalFromJson(Require(doc, "theta_H", where),
                                  Join(where, "theta_H"));
  p.education =
      RationalFromJson(Require(doc, "e_H", where), Join(where, "e_H"));
  p.wage = RationalFromJson(Require(doc, "w", where), Join(where, "w"));
  p.misreport_cost =
      RationalFromJson(Require(doc, "c_mis", where), Join(where, "c_mis"));
  if (doc.contains("prior_high")) {
    const Json& ph = doc["prior_high"];
    const std::string at = Join(where, "prior_high");
    if (ph.is_array()) {
      const auto v = RationalList(ph, 2, at);
      p.prior_high = {v[0], v[1]};
    } else {
      const Rational v = RationalFromJson(ph, at);
      p.prior_high = {v, v};
    }
  }
  if (doc.contains("charge_education")) {
    const Json& ce = doc["charge_education"];
    if (!ce.is_boolean()) {
      throw ConfigError(Join(where, "charge_education"), "expected a boolean");
    }
    p.charge_education = ce.get<bool>();
  }
  return p;
}

ScenarioConfig ParseScenarioConfig(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("", "expected a JSON object");
  const std::string kind = RequireString(Require(doc, "kind", ""), "kind");
  if (kind == "labor") {
    RejectUnknownKeys(doc,
                      {"kind", "theta_L", "theta_H", "e_H", "w", "c_mis",
                       "prior_high", "charge_education"},
                      "");
    labor::LaborParams params = ParseLaborParams(doc);
    Checked("", [&] {
      params.Validate();
      return 0;
    });
    return ScenarioConfig{params};
  }
  if (kind == "generic") return ScenarioConfig{ParseGeneric(doc)};
  throw ConfigError("kind", "expected \"labor\" or \"generic\"");
}

SweepGrid ParseSweepGrid(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("", "expected a JSON object");
  RejectUnknownKeys(doc, {"w_values", "cmis_values", "fixed"}, "");
  SweepGrid grid;
  const Json& ws = RequireArray(doc, "w_values", "");
  for (std::size_t i = 0; i < ws.size(); ++i) {
    grid.wages.push_back(RationalFromJson(ws[i], Index("w_values", i)));
  }
  const Json& cs = RequireArray(doc, "cmis_values", "");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    grid.misreport_costs.push_back(
        RationalFromJson(cs[i], Index("cmis_values", i)));
  }
  Json fixed = Require(doc, "fixed", "");
  if (!fixed.is_object()) throw ConfigError("fixed", "expected an object");
  RejectUnknownKeys(fixed,
                    {"theta_L", "theta_H", "e_H", "prior_high",
                     "charge_education"},
                    "fixed");
  // Placeholders; every cell overrides both.
  fixed["w"] = "1";
  fixed["c_mis"] = "0";
  grid.fixed = ParseLaborParams(fixed, "fixed");
  return grid;
}

Json LaborParamsToJson(const labor::LaborParams& params) {
  return Json{{"theta_L", ToString(params.theta_low)},
              {"theta_H", ToString(params.theta_high)},
              {"e_H", ToString(params.education)},
              {"w", ToString(params.wage)},
              {"c_mis", ToString(params.misreport_cost)},
              {"prior_high",
               {ToString(params.prior_high[0]), ToString(params.prior_high[1])}},
              {"charge_education", params.charge_education}};
}

}  // namespace revaudit
