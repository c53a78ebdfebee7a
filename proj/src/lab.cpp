#include "mira/lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mira {

namespace {

constexpr double kDefectFloor = 1e-13;

std::vector<Rational> decade_schedule() {
  std::vector<Rational> s;
  long long d = 10;
  for (int k = 1; k <= 5; ++k) {
    s.emplace_back(1, d);
    d *= 10;
  }
  return s;
}

const std::vector<long long> kNSchedule = {4, 8, 16, 32, 64};

}  // namespace

ContractionScenario build_scenario(const std::string& id,
                                   const RepParams& params) {
  ContractionScenario sc;
  sc.id = id;

  if (id == "prop1") {
    sc.domain = Domain::Singleton;
    RepParams tp;
    tp.family = Family::Eta00Scalar;
    tp.lambda = params.lambda;
    tp.sigma = params.sigma;
    sc.target = build_algebra_rep(tp);
    RepParams fp;
    fp.family = Family::PiMu;
    fp.mu = params.lambda;
    AlgebraRep family = build_algebra_rep(fp);
    for (const Rational& eps : decade_schedule())
      sc.schedule.push_back({eps, family});
    sc.params = {{"lambda", params.lambda.str()},
                 {"sigma", std::to_string(params.sigma)}};
  } else if (id == "lemma1-principal") {
    sc.domain = Domain::Line;
    RepParams fp;
    fp.family = Family::PrincipalTilde;
    fp.sigma = params.sigma;
    fp.nu = params.nu;
    fp.mu = params.mu;
    AlgebraRep family = build_algebra_rep(fp);
    // target: restriction to m_2 extended trivially to the abelian ideal
    sc.target = family;
    sc.target.bracket_tag = 0;
    sc.target.ops[static_cast<int>(BasisLabel::E21)] = DiffOperator::zero();
    sc.target.ops[static_cast<int>(BasisLabel::E22)] = DiffOperator::zero();
    for (const Rational& eps : decade_schedule())
      sc.schedule.push_back({eps, family});
    sc.params = {{"sigma", std::to_string(params.sigma)},
                 {"nu", params.nu.str()},
                 {"mu", params.mu.str()}};
  } else if (id == "prop3") {
    if (params.lambda.is_zero())
      throw std::invalid_argument(
          "build_scenario: prop3 requires lambda != 0 (use prop4 for the "
          "lambda = 0 case)");
    sc.domain = Domain::PuncturedLine;
    RepParams tp;
    tp.family = Family::Eta10;
    tp.lambda = params.lambda;
    sc.target = build_algebra_rep(tp);
    for (long long n : kNSchedule) {
      RepParams fp;
      fp.family = Family::DiscreteKirillov;
      fp.n = static_cast<int>(n);
      fp.q = params.lambda;
      // eps_n = -4 lambda / n^2
      Rational eps = Rational(-4) * params.lambda / Rational(n * n);
      sc.schedule.push_back({eps, build_algebra_rep(fp)});
    }
    sc.params = {{"lambda", params.lambda.str()}};
  } else if (id == "prop4") {
    sc.domain = Domain::PuncturedLine;
    RepParams tp;
    tp.family = Family::Eta10;
    tp.lambda = Rational(0);
    sc.target = build_algebra_rep(tp);
    for (long long n : kNSchedule) {
      RepParams fp;
      fp.family = Family::DiscreteKirillov;
      fp.n = static_cast<int>(n);
      fp.q = Rational(1, n);
      // eps_n = -4 / n^3
      Rational eps = Rational(-4, n * n * n);
      sc.schedule.push_back({eps, build_algebra_rep(fp)});
    }
  } else if (id == "prop5") {
    if (params.beta.is_zero())
      throw std::invalid_argument("build_scenario: prop5 requires beta != 0");
    sc.domain = Domain::Line;
    RepParams tp;
    tp.family = Family::Eta0Beta;
    tp.lambda = params.lambda;
    tp.beta = params.beta;
    tp.sigma = params.sigma;
    sc.target = build_algebra_rep(tp);
    for (const Rational& eps : decade_schedule()) {
      RepParams fp;
      fp.family = Family::PrincipalTilde;
      fp.sigma = params.sigma;
      fp.nu = params.beta / eps;
      fp.mu = params.lambda + params.beta / eps;
      sc.schedule.push_back({eps, build_algebra_rep(fp)});
    }
    sc.params = {{"beta", params.beta.str()},
                 {"lambda", params.lambda.str()},
                 {"sigma", std::to_string(params.sigma)}};
  } else {
    throw std::invalid_argument("build_scenario: unknown scenario id '" + id +
                                "'");
  }
  return sc;
}

DefectResult defect(const ContractionScenario& scenario,
                    const SchedulePoint& point, BasisLabel y,
                    const TestFunction& f, const QuadratureSettings& settings) {
  if (f.domain() != scenario.domain)
    throw std::invalid_argument("defect: test function domain mismatch");

  const bool complement = (y == BasisLabel::E21 || y == BasisLabel::E22);
  DiffOperator scaled = complement
                            ? GaussianRational(point.eps) * point.family_rep.op(y)
                            : point.family_rep.op(y);
  const DiffOperator& target_op = scenario.target.op(y);

  DefectResult out;
  out.defect_op = scaled - target_op;

  const double lo = f.support_lo(), hi = f.support_hi();
  out.l2 = l2_norm(
      [&](double x) { return apply(scaled, f, x) - apply(target_op, f, x); },
      f.domain(), lo, hi, settings);
  out.predicted_l2 = l2_norm(
      [&](double x) { return apply(out.defect_op, f, x); }, f.domain(), lo, hi,
      settings);

  if (f.domain() == Domain::Singleton) {
    out.sup = std::abs(apply(out.defect_op, f, 0.0));
  } else {
    const bool laurent = out.defect_op.has_negative_exponent();
    for (int i = 0; i < settings.sup_grid; ++i) {
      double x = lo + (hi - lo) * i / (settings.sup_grid - 1);
      if (laurent && x == 0.0) continue;
      out.sup = std::max(out.sup, std::abs(apply(out.defect_op, f, x)));
    }
  }

  if (out.predicted_l2 > kDefectFloor)
    out.rel_err = std::abs(out.l2 - out.predicted_l2) / out.predicted_l2;
  else
    out.rel_err = out.l2 > kDefectFloor ? 1.0 : 0.0;
  return out;
}

std::optional<double> fit_rate(
    const std::vector<std::pair<Rational, double>>& eps_defect_rows) {
  std::vector<double> xs, ys;
  for (const auto& [eps, d] : eps_defect_rows)
    if (d > kDefectFloor) {
      xs.push_back(std::abs(eps.to_double()));
      ys.push_back(d);
    }
  if (xs.size() < 4) return std::nullopt;
  Eigen::VectorXd x = Eigen::Map<Eigen::VectorXd>(xs.data(), xs.size());
  Eigen::VectorXd y = Eigen::Map<Eigen::VectorXd>(ys.data(), ys.size());
  return loglog_slope(x, y);
}

std::vector<TestFunction> default_test_set(Domain domain) {
  switch (domain) {
    case Domain::Line:
      return {TestFunction::bump(Domain::Line, -1.0, 1.0)};
    case Domain::PuncturedLine:
      return {TestFunction::bump(Domain::PuncturedLine, 1.0, 2.0),
              TestFunction::bump(Domain::PuncturedLine, -2.0, -1.0)};
    case Domain::Singleton:
      return {TestFunction::singleton_unit()};
  }
  return {};
}

namespace {

// If op == c * ref coefficient-wise for an exact Gaussian-rational c,
// returns c.
std::optional<GaussianRational> proportionality_factor(
    const DiffOperator& op, const DiffOperator& ref) {
  if (ref.is_zero()) return op.is_zero()
                                ? std::optional<GaussianRational>(
                                      GaussianRational(0))
                                : std::nullopt;
  if (op.is_zero()) return GaussianRational(0);
  const auto& rterms = ref.terms();
  GaussianRational c = op.terms().begin()->second;
  auto it = rterms.find(op.terms().begin()->first);
  if (it == rterms.end()) return std::nullopt;
  c = c / it->second;
  if (!(op == c * ref)) return std::nullopt;
  return c;
}

}  // namespace

ConvergenceReport sweep(const ContractionScenario& scenario,
                        const std::vector<TestFunction>& test_set,
                        const QuadratureSettings& settings) {
  if (scenario.schedule.empty() || test_set.empty())
    throw std::invalid_argument("sweep: empty schedule or test set");

  ConvergenceReport rep;
  rep.scenario_id = scenario.id;
  rep.params = scenario.params;
  for (const auto& pt : scenario.schedule)
    rep.schedule.push_back(pt.eps.str());

  // rows in (schedule, basis, testfn) order; defect operators cached per
  // (schedule, basis) for the proportionality/ratio analysis
  std::vector<std::vector<DiffOperator>> ops_by_basis(4);
  for (const auto& pt : scenario.schedule) {
    for (BasisLabel y : kBasisLabels) {
      bool first_fn = true;
      for (const TestFunction& f : test_set) {
        DefectResult d = defect(scenario, pt, y, f, settings);
        if (first_fn) {
          ops_by_basis[static_cast<int>(y)].push_back(d.defect_op);
          first_fn = false;
        }
        rep.rows.push_back({scenario.id, pt.eps, basis_name(y), f.id(), d.l2,
                            d.sup, d.predicted_l2, d.rel_err});
      }
    }
  }

  // fitted rates per (basis, testfn)
  for (BasisLabel y : kBasisLabels)
    for (const TestFunction& f : test_set) {
      std::vector<std::pair<Rational, double>> pts;
      for (const ReportRow& r : rep.rows)
        if (r.basis == basis_name(y) && r.testfn == f.id())
          pts.emplace_back(r.eps, r.l2_defect);
      RateInfo info;
      info.basis = basis_name(y);
      info.testfn = f.id();
      auto rate = fit_rate(pts);
      info.exact_zero = !rate.has_value();
      info.rate = rate.value_or(0.0);
      rep.rates.push_back(info);

      // monotone decrease along the schedule
      for (size_t i = 1; i < pts.size(); ++i)
        if (pts[i].second > pts[i - 1].second + kDefectFloor)
          rep.monotone = false;
    }

  // ratio stability: when the defect operators along the schedule are exact
  // multiples of the first nonzero one, defect / |factor| must be constant
  for (int yi = 0; yi < 4; ++yi) {
    const auto& ops = ops_by_basis[yi];
    auto ref_it = std::find_if(ops.begin(), ops.end(),
                               [](const DiffOperator& d) { return !d.is_zero(); });
    if (ref_it == ops.end()) continue;
    std::vector<double> factors;
    bool proportional = true;
    for (const auto& op : ops) {
      auto c = proportionality_factor(op, *ref_it);
      if (!c) {
        proportional = false;
        break;
      }
      factors.push_back(c->modulus());
    }
    if (!proportional) continue;
    for (const TestFunction& f : test_set) {
      std::vector<double> ratios;
      for (size_t k = 0; k < scenario.schedule.size(); ++k) {
        if (factors[k] == 0.0) continue;
        for (const ReportRow& r : rep.rows)
          if (r.eps == scenario.schedule[k].eps &&
              r.basis == basis_name(kBasisLabels[yi]) && r.testfn == f.id())
            ratios.push_back(r.sup_defect / factors[k]);
      }
      for (size_t k = 1; k < ratios.size(); ++k)
        if (std::abs(ratios[k] - ratios[0]) >
            1e-6 * std::max(std::abs(ratios[0]), kDefectFloor))
          rep.ratio_stable = false;
    }
  }
  return rep;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string to_csv(const ConvergenceReport& report) {
  std::ostringstream os;
  os << "scenario,epsilon,basis,testfn,l2_defect,sup_defect,predicted_l2,"
        "rel_err\n";
  for (const ReportRow& r : report.rows)
    os << r.scenario << ',' << r.eps.str() << ',' << r.basis << ','
       << r.testfn << ',' << format_double(r.l2_defect) << ','
       << format_double(r.sup_defect) << ',' << format_double(r.predicted_l2)
       << ',' << format_double(r.rel_err) << '\n';
  return os.str();
}

std::string to_json(const ConvergenceReport& report) {
  nlohmann::ordered_json j;
  j["scenario"] = report.scenario_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  j["params"] = params;
  j["schedule"] = report.schedule;
  j["rates"] = nlohmann::ordered_json::array();
  for (const RateInfo& r : report.rates) {
    nlohmann::ordered_json jr;
    jr["basis"] = r.basis;
    jr["testfn"] = r.testfn;
    if (r.exact_zero)
      jr["rate"] = "exact-zero";
    else
      jr["rate"] = format_double(r.rate);
    j["rates"].push_back(jr);
  }
  j["rows"] = nlohmann::ordered_json::array();
  for (const ReportRow& r : report.rows) {
    nlohmann::ordered_json jr;
    jr["scenario"] = r.scenario;
    jr["epsilon"] = r.eps.str();
    jr["basis"] = r.basis;
    jr["testfn"] = r.testfn;
    jr["l2_defect"] = format_double(r.l2_defect);
    jr["sup_defect"] = format_double(r.sup_defect);
    jr["predicted_l2"] = format_double(r.predicted_l2);
    jr["rel_err"] = format_double(r.rel_err);
    j["rows"].push_back(jr);
  }
  return j.dump(2) + "\n";
}

}  // namespace mira
