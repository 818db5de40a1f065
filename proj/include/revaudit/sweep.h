#ifndef REVAUDIT_SWEEP_H_
#define REVAUDIT_SWEEP_H_

#include <optional>
#include <string>
#include <vector>

#include "revaudit/config.h"

namespace revaudit {

struct SweepRow {
  Rational wage;
  Rational misreport_cost;
  // Unset when the cell failed; `error` then holds the message.
  std::optional<bool> in_window;
  std::optional<bool> separating_is_bne;
  std::optional<bool> truthful_is_bne;
  std::optional<bool> violation;
  std::string error;

  bool operator==(const SweepRow&) const = default;
};

SweepRow EvaluateCell(const labor::LaborParams& fixed, const Rational& wage,
                      const Rational& misreport_cost);

// Rows ordered by wage, then misreport cost, in input order. Cells run
// concurrently.
std::vector<SweepRow> RunSweep(const SweepGrid& grid);

std::string SweepToCsv(const std::vector<SweepRow>& rows);
Json SweepToJson(const std::vector<SweepRow>& rows);

}  // namespace revaudit

#endif  // REVAUDIT_SWEEP_H_
