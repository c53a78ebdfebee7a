#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mira/lab.hpp"
#include "test_util.hpp"

using namespace mira;

namespace {

const GaussianRational kI = GaussianRational::i();

// independent reference quadrature: composite Simpson on |g|^2
double simpson_l2(const std::function<std::complex<double>(double)>& g,
                  Domain domain, double a, double b, int intervals = 1 << 17) {
  auto w = [&](double x) {
    double v = std::norm(g(x));
    return domain == Domain::PuncturedLine ? v / std::abs(x) : v;
  };
  double h = (b - a) / intervals;
  double acc = w(a) + w(b);
  for (int i = 1; i < intervals; ++i)
    acc += w(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return std::sqrt(acc * h / 3.0);
}

}  // namespace

TEST_CASE("l2 norm against an independent reference quadrature") {
  for (Domain dom : {Domain::Line, Domain::PuncturedLine}) {
    TestFunction f = dom == Domain::Line
                         ? TestFunction::bump(dom, -1.0, 1.0)
                         : TestFunction::bump(dom, 1.0, 2.0);
    auto g = [&f](double x) { return std::complex<double>(f(x)); };
    double got = l2_norm(g, dom, f.support_lo(), f.support_hi());
    double ref = simpson_l2(g, dom, f.support_lo(), f.support_hi());
    CHECK(std::abs(got - ref) / ref < 1e-10);
  }
}

TEST_CASE("l2 norm: zero and homogeneity") {
  auto zero = [](double) { return std::complex<double>(0.0); };
  CHECK(l2_norm(zero, Domain::Line, -1.0, 1.0) == 0.0);

  TestFunction f = TestFunction::bump(Domain::Line, -1.0, 1.0);
  double base = l2_norm(f);
  for (int trial = 0; trial < 10; ++trial) {
    std::complex<double> c(testutil::random_rational().to_double(),
                           testutil::random_rational().to_double());
    double scaled = l2_norm([&](double x) { return c * f(x); }, Domain::Line,
                            -1.0, 1.0);
    CHECK(std::abs(scaled - std::abs(c) * base) <= 1e-12 * (1.0 + base));
  }
}

TEST_CASE("node doubling changes l2 values by <= 1e-10 relative") {
  TestFunction f = TestFunction::bump(Domain::PuncturedLine, 1.0, 2.0);
  DiffOperator op = DiffOperator::mul(kI, -1) +
                    DiffOperator::term(GaussianRational(4), 1, 2);
  auto g = [&](double x) { return apply(op, f, x); };
  QuadratureSettings s1, s2;
  s2.nodes = 64;
  double a = l2_norm(g, f.domain(), 1.0, 2.0, s1);
  double b = l2_norm(g, f.domain(), 1.0, 2.0, s2);
  CHECK(std::abs(a - b) / a < 1e-10);
}

TEST_CASE("scenario construction") {
  RepParams p;
  p.lambda = Rational(1);
  ContractionScenario sc = build_scenario("prop3", p);
  REQUIRE(sc.schedule.size() == 5);
  CHECK(sc.schedule[0].eps == Rational(-1, 4));  // n = 4: -4*1/16

  ContractionScenario sc4 = build_scenario("prop4", RepParams{});
  CHECK(sc4.schedule[0].eps == Rational(-1, 16));  // n = 4: -4/64
  // spec example n = 2 -> -1/2 (not on the default schedule)
  CHECK(Rational(-4, 2 * 2 * 2) == Rational(-1, 2));

  RepParams bad;
  bad.lambda = Rational(0);
  CHECK_THROWS_AS(build_scenario("prop3", bad), std::invalid_argument);
  CHECK_THROWS_AS(build_scenario("nosuch", RepParams{}),
                  std::invalid_argument);

  // prop1 with lambda = 0: target vanishes on everything
  RepParams z;
  z.lambda = Rational(0);
  ContractionScenario sc1 = build_scenario("prop1", z);
  for (BasisLabel y : kBasisLabels) CHECK(sc1.target.op(y).is_zero());
}

TEST_CASE("prop5 defect operators factor exactly") {
  RepParams p;
  p.beta = Rational(1);
  p.lambda = Rational(0);
  p.sigma = 0;
  ContractionScenario sc = build_scenario("prop5", p);
  TestFunction f = TestFunction::bump(Domain::Line, -1.0, 1.0);

  for (const SchedulePoint& pt : sc.schedule) {
    // e11, e12: the beta/eps terms cancel symbolically
    auto d11 = defect(sc, pt, BasisLabel::E11, f);
    CHECK(d11.defect_op.is_zero());
    CHECK(d11.l2 == 0.0);
    CHECK(d11.sup == 0.0);
    auto d12 = defect(sc, pt, BasisLabel::E12, f);
    CHECK(d12.defect_op.is_zero());

    // e21: D = -eps (x + x^2 d)
    DiffOperator expect21 =
        GaussianRational(-pt.eps) *
        (DiffOperator::mul(GaussianRational(1), 1) +
         DiffOperator::deriv(1, GaussianRational(1), 2));
    auto d21 = defect(sc, pt, BasisLabel::E21, f);
    CHECK(op_equal(d21.defect_op, expect21));
    double norm21 = l2_norm(
        [&](double x) {
          return apply(DiffOperator::mul(GaussianRational(1), 1) +
                           DiffOperator::deriv(1, GaussianRational(1), 2),
                       f, x);
        },
        Domain::Line, -1.0, 1.0);
    CHECK(std::abs(d21.l2 - std::abs(pt.eps.to_double()) * norm21) /
              d21.l2 < 1e-10);
    CHECK(d21.rel_err < 1e-10);
  }
}

TEST_CASE("prop3 defect operator matches the derived form") {
  RepParams p;
  p.lambda = Rational(1);
  ContractionScenario sc = build_scenario("prop3", p);
  TestFunction f = TestFunction::bump(Domain::PuncturedLine, 1.0, 2.0);

  long long n = 4;
  for (const SchedulePoint& pt : sc.schedule) {
    // D(e21) = -(1/n^2)(x^{-1} + 4 x d^2) scaled by i
    DiffOperator expect =
        GaussianRational(Rational(-1, n * n)) *
        (DiffOperator::mul(kI, -1) +
         DiffOperator::term(GaussianRational(4) * kI, 1, 2));
    auto d = defect(sc, pt, BasisLabel::E21, f);
    CHECK(op_equal(d.defect_op, expect));
    n *= 2;
  }
}

TEST_CASE("sweep: invariants and rates") {
  RepParams p;
  p.beta = Rational(1);
  p.lambda = Rational(0);
  p.sigma = 0;
  ContractionScenario sc = build_scenario("prop5", p);
  auto report = sweep(sc, default_test_set(sc.domain));

  CHECK(report.monotone);
  CHECK(report.ratio_stable);
  for (const ReportRow& r : report.rows) CHECK(r.rel_err < 1e-8);
  for (const RateInfo& ri : report.rates) {
    if (ri.basis == "e11" || ri.basis == "e12")
      CHECK(ri.exact_zero);
    else {
      CHECK(!ri.exact_zero);
      CHECK(std::abs(ri.rate - 1.0) < 0.01);
    }
  }
}

TEST_CASE("lemma1 mechanism: constant family") {
  RepParams p;
  p.sigma = 0;
  p.nu = Rational(1, 3);
  p.mu = Rational(2, 7);
  ContractionScenario sc = build_scenario("lemma1-principal", p);
  TestFunction f = TestFunction::bump(Domain::Line, -1.0, 1.0);
  RepParams pp;
  pp.family = Family::PrincipalTilde;
  pp.sigma = 0;
  pp.nu = Rational(1, 3);
  pp.mu = Rational(2, 7);
  AlgebraRep full = build_algebra_rep(pp);

  for (const SchedulePoint& pt : sc.schedule) {
    CHECK(defect(sc, pt, BasisLabel::E11, f).defect_op.is_zero());
    CHECK(defect(sc, pt, BasisLabel::E12, f).defect_op.is_zero());
    for (BasisLabel y : {BasisLabel::E21, BasisLabel::E22}) {
      auto d = defect(sc, pt, y, f);
      double expect =
          std::abs(pt.eps.to_double()) *
          l2_norm([&](double x) { return apply(full.op(y), f, x); },
                  Domain::Line, -1.0, 1.0);
      CHECK(std::abs(d.l2 - expect) / expect < 1e-8);
    }
  }
}

TEST_CASE("fit_rate") {
  // exact linear data -> slope 1
  std::vector<std::pair<Rational, double>> rows;
  for (int k = 1; k <= 5; ++k) {
    Rational eps(1, static_cast<long long>(std::pow(10, k)));
    rows.emplace_back(eps, 3.7 * std::abs(eps.to_double()));
  }
  auto r = fit_rate(rows);
  REQUIRE(r.has_value());
  CHECK(std::abs(*r - 1.0) < 1e-12);

  // all-zero rows: exact-zero convergence
  for (auto& [eps, d] : rows) d = 0.0;
  CHECK(!fit_rate(rows).has_value());
}

TEST_CASE("defect rejects incompatible domains") {
  RepParams p;
  p.lambda = Rational(1);
  ContractionScenario sc = build_scenario("prop3", p);
  TestFunction f = TestFunction::bump(Domain::Line, -1.0, 1.0);
  CHECK_THROWS_AS(defect(sc, sc.schedule[0], BasisLabel::E21, f),
                  std::invalid_argument);
}

TEST_CASE("reports are byte-identical across runs") {
  RepParams p;
  p.beta = Rational(1);
  p.lambda = Rational(1, 2);
  p.sigma = 1;
  ContractionScenario sc = build_scenario("prop5", p);
  auto r1 = sweep(sc, default_test_set(sc.domain));
  auto r2 = sweep(build_scenario("prop5", p), default_test_set(sc.domain));
  CHECK(to_csv(r1) == to_csv(r2));
  CHECK(to_json(r1) == to_json(r2));
  CHECK(to_csv(r1).substr(0, 8) == "scenario");
}
