#ifndef REVAUDIT_CONFIG_H_
#define REVAUDIT_CONFIG_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "revaudit/equilibrium.h"
#include "revaudit/game.h"
#include "revaudit/labor.h"

namespace revaudit {

using Json = nlohmann::ordered_json;

// Malformed or invalid input. `where` is a JSON field path such as
// "agents[1].prior" or a "line N, column M" position.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string where, const std::string& message)
      : std::runtime_error(where.empty() ? message : where + ": " + message),
        where_(std::move(where)) {}

  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Explicitly tabled game read from a "generic" scenario file.
struct GenericScenario {
  TypeSpace types;
  Mechanism mechanism;
  UtilityTable utilities;
  CostModel costs;
  SocialChoiceFunction scf;
  std::optional<StrategyProfile> profile;
};

struct ScenarioConfig {
  std::variant<labor::LaborParams, GenericScenario> scenario;

  bool is_labor() const {
    return std::holds_alternative<labor::LaborParams>(scenario);
  }
  const labor::LaborParams& labor() const {
    return std::get<labor::LaborParams>(scenario);
  }
  const GenericScenario& generic() const {
    return std::get<GenericScenario>(scenario);
  }
};

struct SweepGrid {
  std::vector<Rational> wages;
  std::vector<Rational> misreport_costs;
  // Every field except wage and misreport_cost is taken from here.
  labor::LaborParams fixed;
};

// Accepts "p/q" strings and JSON integers; anything else is a ConfigError.
Rational RationalFromJson(const Json& value, const std::string& where);

// Reads and parses a JSON file; syntax errors carry their line and column.
Json ReadJsonFile(const std::string& path);

ScenarioConfig ParseScenarioConfig(const Json& doc);
labor::LaborParams ParseLaborParams(const Json& doc,
                                    const std::string& where = "");
SweepGrid ParseSweepGrid(const Json& doc);

Json LaborParamsToJson(const labor::LaborParams& params);

}  // namespace revaudit

#endif  // REVAUDIT_CONFIG_H_
