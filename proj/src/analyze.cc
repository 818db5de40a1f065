#include "revaudit/analyze.h"

#include "revaudit/report.h"

namespace revaudit {
namespace {

AnalyzeResult RunLabor(labor::LaborParams params,
                       const AnalyzeOptions& options) {
  if (options.prior_high) params.prior_high = {*options.prior_high,
                                               *options.prior_high};
  params.Validate();
  const labor::LaborScenario scenario = labor::BuildLaborScenario(params);
  const AuditReport audit = labor::AuditLabor(params);

  AnalyzeResult result;
  result.violation = audit.violation;
  result.report = Json{
      {"kind", "labor"},
      {"params", LaborParamsToJson(params)},
      {"violation", audit.violation},
      {"audit", AuditReportToJson(audit, scenario.mechanism, scenario.types)},
      {"separating_equilibrium",
       SeparatingReportToJson(labor::CheckSeparatingEquilibrium(params))},
      {"direct_mechanism", DirectReportToJson(labor::CheckDirectMechanism(
                               params, options.max_profiles))}};
  return result;
}

AnalyzeResult RunGeneric(const GenericScenario& s,
                         const AnalyzeOptions& options) {
  AnalyzeResult result;
  if (options.prior_high) {
    result.warnings.push_back(
        "--prior-high applies to labor scenarios only; ignored");
  }
  const AuditReport audit =
      s.profile ? AuditRevelationPrinciple(s.mechanism, *s.profile, s.scf,
                                           s.types, s.utilities, s.costs)
                : AuditRevelationPrinciple(s.mechanism, s.scf, s.types,
                                           s.utilities, s.costs,
                                           options.max_profiles);
  result.violation = audit.violation;
  result.report = Json{{"kind", "generic"},
                       {"violation", audit.violation},
                       {"profile_searched", !s.profile.has_value()},
                       {"audit", AuditReportToJson(audit, s.mechanism, s.types)}};
  return result;
}

}  // namespace

AnalyzeResult RunScenario(const ScenarioConfig& config,
                          const AnalyzeOptions& options) {
  if (config.is_labor()) return RunLabor(config.labor(), options);
  return RunGeneric(config.generic(), options);
}

}  // namespace revaudit
