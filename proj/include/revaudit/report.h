#ifndef REVAUDIT_REPORT_H_
#define REVAUDIT_REPORT_H_

#include <string>

#include "revaudit/config.h"
#include "revaudit/equilibrium.h"
#include "revaudit/labor.h"
#include "revaudit/revelation.h"

namespace revaudit {

// Reports name agents by index and everything else by label. Types label
// the direct mechanism's reports, so the indirect mechanism and the type
// space are enough to resolve every index in an AuditReport.
Json AuditReportToJson(const AuditReport& report, const Mechanism& mechanism,
                       const TypeSpace& types);
AuditReport AuditReportFromJson(const Json& doc, const Mechanism& mechanism,
                                const TypeSpace& types);

Json StrategyProfileToJson(const StrategyProfile& profile,
                           const Mechanism& mechanism, const TypeSpace& types);
StrategyProfile StrategyProfileFromJson(const Json& doc,
                                        const Mechanism& mechanism,
                                        const TypeSpace& types);

Json NormalFormToJson(const NormalFormGame& game);

Json SeparatingReportToJson(const labor::SeparatingReport& report);
Json DirectReportToJson(const labor::DirectReport& report);

// Two-space indented dump with a trailing newline.
std::string Render(const Json& doc);

}  // namespace revaudit

#endif  // REVAUDIT_REPORT_H_
