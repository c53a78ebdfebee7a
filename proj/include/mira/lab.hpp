#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mira/catalog.hpp"

namespace mira {

/// One point of an epsilon-schedule: the exact deformation parameter and
/// the (exactly assembled) family representation at that point.
struct SchedulePoint {
  Rational eps;
  AlgebraRep family_rep;
};

/// A named contraction: family eps -> pi_eps, target pi_0, schedule with
/// strictly decreasing |eps|.
struct ContractionScenario {
  std::string id;
  Domain domain = Domain::Line;
  AlgebraRep target;
  std::vector<SchedulePoint> schedule;
  std::vector<std::pair<std::string, std::string>> params;  // name -> value
};

/// ids: prop1, lemma1-principal, prop3, prop4, prop5. Parameters read from
/// `params` per scenario (prop1: lambda; lemma1-principal: sigma, nu, mu;
/// prop3: lambda != 0; prop5: beta, lambda, sigma). prop3 rejects
/// lambda = 0.
ContractionScenario build_scenario(const std::string& id,
                                   const RepParams& params);

struct DefectResult {
  DiffOperator defect_op;  // pi_eps(t_eps Y) - pi_0(Y), exact
  double l2 = 0.0;         // norm of the pointwise difference of applications
  double sup = 0.0;        // max |(D_eps f)(x)| over the evaluation grid
  double predicted_l2 = 0.0;  // ||D_eps f|| via the symbolic defect operator
  double rel_err = 0.0;
};

DefectResult defect(const ContractionScenario& scenario,
                    const SchedulePoint& point, BasisLabel y,
                    const TestFunction& f,
                    const QuadratureSettings& settings = {});

struct ReportRow {
  std::string scenario;
  Rational eps;
  std::string basis;
  std::string testfn;
  double l2_defect = 0.0;
  double sup_defect = 0.0;
  double predicted_l2 = 0.0;
  double rel_err = 0.0;
};

struct RateInfo {
  std::string basis;
  std::string testfn;
  bool exact_zero = false;  // every defect below the numerical floor
  double rate = 0.0;        // log-log slope vs |eps| (when not exact_zero)
};

struct ConvergenceReport {
  std::string scenario_id;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> schedule;  // exact epsilon strings
  std::vector<ReportRow> rows;        // sorted by |eps| descending
  std::vector<RateInfo> rates;
  bool monotone = true;      // defects nonincreasing along the schedule
  bool ratio_stable = true;  // defect / |proportionality factor| constant
};

ConvergenceReport sweep(const ContractionScenario& scenario,
                        const std::vector<TestFunction>& test_set,
                        const QuadratureSettings& settings = {});

/// Least-squares slope of log(defect) vs log|eps| over rows with defect
/// above the 1e-13 floor; requires >= 4 such rows.
/// Returns nullopt (exact-zero convergence) when all rows are at the floor.
std::optional<double> fit_rate(const std::vector<std::pair<Rational, double>>&
                                   eps_defect_rows);

std::vector<TestFunction> default_test_set(Domain domain);

std::string to_csv(const ConvergenceReport& report);
std::string to_json(const ConvergenceReport& report);

/// Fixed 15-significant-digit float formatting used in all reports.
std::string format_double(double v);

}  // namespace mira
