#include "revaudit/sweep.h"

#include <exception>
#include <future>
#include <sstream>

namespace revaudit {
namespace {

std::string CsvFlag(const std::optional<bool>& v) {
  if (!v) return "";
  return *v ? "true" : "false";
}

Json JsonFlag(const std::optional<bool>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string CsvQuote(const std::string& s) {
  if (s.empty()) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SweepRow EvaluateCell(const labor::LaborParams& fixed, const Rational& wage,
                      const Rational& misreport_cost) {
  SweepRow row{wage, misreport_cost, {}, {}, {}, {}, {}};
  try {
    labor::LaborParams params = fixed;
    params.wage = wage;
    params.misreport_cost = misreport_cost;
    const labor::SeparatingReport sep =
        labor::CheckSeparatingEquilibrium(params);
    const labor::LaborScenario s = labor::BuildLaborScenario(params);
    const AuditReport audit = labor::AuditLabor(params);
    row.in_window = sep.in_window;
    row.separating_is_bne = sep.separating_is_bne;
    row.truthful_is_bne =
        IsTruthfullyImplementable(s.scf, s.types, s.costs, s.utilities)
            .truthful;
    row.violation = audit.violation;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<SweepRow> RunSweep(const SweepGrid& grid) {
  std::vector<std::future<SweepRow>> cells;
  for (const Rational& w : grid.wages) {
    for (const Rational& c : grid.misreport_costs) {
      cells.push_back(std::async(std::launch::async, EvaluateCell,
                                 std::cref(grid.fixed), w, c));
    }
  }
  std::vector<SweepRow> rows;
  rows.reserve(cells.size());
  for (auto& f : cells) rows.push_back(f.get());
  return rows;
}

std::string SweepToCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "w,c_mis,in_window,separating_is_bne,truthful_is_bne,violation,error\n";
  for (const SweepRow& r : rows) {
    out << ToString(r.wage) << ',' << ToString(r.misreport_cost) << ','
        << CsvFlag(r.in_window) << ',' << CsvFlag(r.separating_is_bne) << ','
        << CsvFlag(r.truthful_is_bne) << ',' << CsvFlag(r.violation) << ','
        << CsvQuote(r.error) << '\n';
  }
  return out.str();
}

Json SweepToJson(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const SweepRow& r : rows) {
    out.push_back(Json{{"w", ToString(r.wage)},
                       {"c_mis", ToString(r.misreport_cost)},
                       {"in_window", JsonFlag(r.in_window)},
                       {"separating_is_bne", JsonFlag(r.separating_is_bne)},
                       {"truthful_is_bne", JsonFlag(r.truthful_is_bne)},
                       {"violation", JsonFlag(r.violation)},
                       {"error", r.error.empty() ? Json(nullptr)
                                                 : Json(r.error)}});
  }
  return Json{{"rows", std::move(out)}};
}

}  // namespace revaudit
