#include "revaudit/matrices.h"

#include <sstream>

namespace revaudit {
namespace {

std::string DominantLine(const std::optional<DominantAction>& d,
                         const std::vector<std::string>& labels) {
  if (!d) return "none";
  return labels[d->action] +
         (d->kind == Dominance::kStrict ? " (strict)" : " (weak)");
}

}  // namespace

std::string RenderMatrices(const labor::LaborParams& params) {
  const auto cases = labor::CaseMatrices(params);
  const auto& types = labor::TypeLabels();
  std::ostringstream out;
  out << "# Direct mechanism profit matrices\n\n"
      << "theta_L = " << ToString(params.theta_low)
      << ", theta_H = " << ToString(params.theta_high)
      << ", e_H = " << ToString(params.education)
      << ", w = " << ToString(params.wage)
      << ", c_mis = " << ToString(params.misreport_cost) << "\n";
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const labor::CaseMatrix& c = cases[k];
    out << "\n## Case " << k + 1 << ": agent 1 is " << types[c.true_types[0]]
        << ", agent 2 is " << types[c.true_types[1]] << "\n\n"
        << "| agent 1 \\ agent 2 |";
    for (const auto& t : types) out << ' ' << t << " |";
    out << "\n|---|";
    for (std::size_t j = 0; j < types.size(); ++j) out << "---|";
    out << '\n';
    for (int r = 0; r < 2; ++r) {
      out << "| " << types[r] << " |";
      for (int s = 0; s < 2; ++s) {
        out << " (" << ToString(c.game.Payoff({r, s}, 0)) << ", "
            << ToString(c.game.Payoff({r, s}, 1)) << ") |";
      }
      out << '\n';
    }
    out << "\nDominant report: agent 1 " << DominantLine(c.dominant[0], types)
        << "; agent 2 " << DominantLine(c.dominant[1], types) << "\n\n"
        << "Pure Nash equilibria:";
    if (c.nash.empty()) out << " none";
    for (std::size_t n = 0; n < c.nash.size(); ++n) {
      out << (n ? ", " : " ") << '(' << types[c.nash[n][0]] << ", "
          << types[c.nash[n][1]] << ')';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace revaudit
