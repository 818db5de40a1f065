#ifndef REVAUDIT_LABOR_H_
#define REVAUDIT_LABOR_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "revaudit/equilibrium.h"
#include "revaudit/game.h"
#include "revaudit/revelation.h"

namespace revaudit::labor {

// Two workers with productivity theta_L or theta_H compete for one job. In
// the indirect mechanism each bids an education level in {0, e_H}; the
// higher bid wins wage w, equal bids split the offer. Education costs e/theta.
// In the direct mechanism a low type claiming theta_H pays c_mis.

inline constexpr int kLow = 0;   // type theta_L / report theta_L
inline constexpr int kHigh = 1;  // type theta_H / report theta_H
inline constexpr int kNoEducation = 0;
inline constexpr int kEducated = 1;

const std::vector<std::string>& TypeLabels();
const std::vector<std::string>& BidLabels();

inline constexpr int kAgent1Hired = 0;
inline constexpr int kSplit = 1;
inline constexpr int kAgent2Hired = 2;

struct LaborParams {
  Rational theta_low = 1;
  Rational theta_high = 2;
  Rational education = 1;
  Rational wage{3, 2};
  Rational misreport_cost{1, 2};
  // P(theta_H) for each agent.
  std::array<Rational, 2> prior_high{Rational(1, 2), Rational(1, 2)};
  // When false the education cost e/theta is dropped (zero-cost regression).
  bool charge_education = true;

  // Throws DomainError naming the first violated constraint.
  void Validate() const;

  bool operator==(const LaborParams&) const = default;
};

struct LaborScenario {
  LaborParams params;
  TypeSpace types;
  SocialChoiceFunction scf;
  Mechanism mechanism;
  UtilityTable utilities;
  CostModel costs;
  StrategyProfile separating;

  BayesianGame IndirectGame() const;
  DirectMechanism Direct() const;
};

LaborScenario BuildLaborScenario(const LaborParams& params);

struct OpenInterval {
  Rational lower;
  Rational upper;

  bool Contains(const Rational& x) const { return lower < x && x < upper; }
  bool empty() const { return !(lower < upper); }
};

// Wages at which the separating profile is a strict equilibrium:
// (2 e_H / theta_H, 2 e_H / theta_L).
OpenInterval WageWindow(const LaborParams& params);

// Both agents bid e_H at theta_H and 0 at theta_L.
StrategyProfile SeparatingProfile();

// Ex-post value of each bid for agent 1 when agent 2 follows the separating
// profile and both true types are fixed.
struct BestResponseCase {
  int own_type = kLow;
  int opponent_type = kLow;
  Rational value_educated;
  Rational value_uneducated;
  // Strictly better bid, or nullopt on a tie.
  std::optional<int> best;
};

struct SeparatingReport {
  OpenInterval window;
  bool in_window = false;
  bool separating_is_bne = false;
  std::optional<Deviation> witness;
  bool implements_scf = false;
  // Equilibrium profit of the high type in the (high, high) match,
  // w/2 - e_H/theta_H, must be strictly positive.
  Rational ir_margin;
  bool ir_satisfied = false;
  // Ordered (L,L), (L,H), (H,L), (H,H) by (own, opponent) type.
  std::array<BestResponseCase, 4> cases;
  std::vector<std::string> notes;
};

SeparatingReport CheckSeparatingEquilibrium(const LaborParams& params);

struct CaseMatrix {
  Profile true_types;
  NormalFormGame game;
  std::array<std::optional<DominantAction>, 2> dominant;
  std::vector<Profile> nash;
};

// The four true-type profiles in the order the matrices are usually listed:
// (H,H), (L,H), (H,L), (L,L).
inline const std::array<Profile, 4> kCaseTypes = {
    Profile{kHigh, kHigh}, Profile{kLow, kHigh}, Profile{kHigh, kLow},
    Profile{kLow, kLow}};

struct DirectReport {
  bool cmis_below_half_wage = false;
  bool truthful_is_bne = false;
  std::optional<Deviation> truthful_witness;
  std::vector<StrategyProfile> equilibria;
  bool unique_bne_all_report_high = false;
  std::array<CaseMatrix, 4> cases;
  // When every case matrix has a strictly dominant report for both agents,
  // the profile those reports define; the Bayesian search must agree.
  std::optional<StrategyProfile> expost_prediction;
  std::optional<bool> views_agree;
  std::vector<std::string> notes;
};

DirectReport CheckDirectMechanism(const LaborParams& params,
                                  std::size_t cap = kDefaultProfileCap);

std::array<CaseMatrix, 4> CaseMatrices(const LaborParams& params);

// u_0 = pr_1 theta_1 + pr_2 theta_2 - w for the outcome of the given bids.
Rational FirmExpectedUtility(const LaborScenario& scenario,
                             const Profile& bids, const Profile& true_types);

AuditReport AuditLabor(const LaborParams& params);

}  // namespace revaudit::labor

#endif  // REVAUDIT_LABOR_H_
