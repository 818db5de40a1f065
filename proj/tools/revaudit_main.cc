#include <cstddef>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "revaudit/analyze.h"
#include "revaudit/config.h"
#include "revaudit/matrices.h"
#include "revaudit/report.h"
#include "revaudit/reproduce.h"
#include "revaudit/sweep.h"

namespace {

using revaudit::Json;

struct Flags {
  std::string config_path;
  std::string prior_high;
  std::string format;
  std::size_t max_profiles = revaudit::kDefaultProfileCap;
};

void CheckFormat(const std::string& format, const std::string& allowed,
                 const std::string& command) {
  if (allowed.find(format) == std::string::npos) {
    throw revaudit::ConfigError("--format", "format " + format +
                                                " is not supported by " +
                                                command);
  }
}

int Analyze(const Flags& flags) {
  CheckFormat(flags.format.empty() ? "json" : flags.format, "json",
              "analyze");
  const revaudit::ScenarioConfig config =
      revaudit::ParseScenarioConfig(revaudit::ReadJsonFile(flags.config_path));
  revaudit::AnalyzeOptions options;
  options.max_profiles = flags.max_profiles;
  if (!flags.prior_high.empty()) {
    options.prior_high = revaudit::ParseRational(flags.prior_high);
  }
  const revaudit::AnalyzeResult result = revaudit::RunScenario(config, options);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << revaudit::Render(result.report);
  return result.exit_code();
}

int Sweep(const Flags& flags) {
  const std::string format = flags.format.empty() ? "csv" : flags.format;
  CheckFormat(format, "csv json", "sweep");
  revaudit::SweepGrid grid =
      revaudit::ParseSweepGrid(revaudit::ReadJsonFile(flags.config_path));
  if (!flags.prior_high.empty()) {
    const revaudit::Rational p = revaudit::ParseRational(flags.prior_high);
    grid.fixed.prior_high = {p, p};
  }
  const auto rows = revaudit::RunSweep(grid);
  if (format == "csv") {
    std::cout << revaudit::SweepToCsv(rows);
  } else {
    std::cout << revaudit::Render(revaudit::SweepToJson(rows));
  }
  return revaudit::kExitOk;
}

int Matrices(const Flags& flags) {
  const std::string format = flags.format.empty() ? "md" : flags.format;
  CheckFormat(format, "md json", "matrices");
  const revaudit::ScenarioConfig config =
      revaudit::ParseScenarioConfig(revaudit::ReadJsonFile(flags.config_path));
  if (!config.is_labor()) {
    throw revaudit::ConfigError("kind", "matrices requires a labor scenario");
  }
  revaudit::labor::LaborParams params = config.labor();
  if (!flags.prior_high.empty()) {
    const revaudit::Rational p = revaudit::ParseRational(flags.prior_high);
    params.prior_high = {p, p};
  }
  params.Validate();
  if (format == "md") {
    std::cout << revaudit::RenderMatrices(params);
  } else {
    Json cases = Json::array();
    for (const auto& c : revaudit::labor::CaseMatrices(params)) {
      cases.push_back(revaudit::NormalFormToJson(c.game));
    }
    std::cout << revaudit::Render(Json{{"case_matrices", std::move(cases)}});
  }
  return revaudit::kExitOk;
}

int RunReproduce(const Flags& flags) {
  CheckFormat(flags.format.empty() ? "json" : flags.format, "json",
              "reproduce-paper");
  const revaudit::ReproduceOutcome outcome = revaudit::Reproduce();
  std::cout << outcome.output;
  for (const auto& f : outcome.failures) {
    std::cerr << "criterion failed: " << f << "\n";
  }
  return outcome.all_passed ? revaudit::kExitOk : revaudit::kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Revelation-principle auditor for Bayesian mechanisms"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--prior-high", flags.prior_high,
                    "P(theta_H) for both agents, as p/q");
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    cmd->add_option("--max-profiles", flags.max_profiles,
                    "Largest strategy-profile space searched exhaustively")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Audit a scenario file");
  analyze->add_option("config", flags.config_path, "Scenario JSON")
      ->required();
  add_common(analyze);
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep wages and costs");
  sweep->add_option("config", flags.config_path, "Sweep grid JSON")
      ->required();
  add_common(sweep);
  CLI::App* matrices =
      app.add_subcommand("matrices", "Direct mechanism profit matrices");
  matrices->add_option("config", flags.config_path, "Labor scenario JSON")
      ->required();
  add_common(matrices);
  CLI::App* reproduce = app.add_subcommand(
      "reproduce-paper", "Run every canonical check and report pass/fail");
  add_common(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? revaudit::kExitOk : revaudit::kExitInputError;
  }

  try {
    if (*analyze) return Analyze(flags);
    if (*sweep) return Sweep(flags);
    if (*matrices) return Matrices(flags);
    return RunReproduce(flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return revaudit::kExitInputError;
  }
}
