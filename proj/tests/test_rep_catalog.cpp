#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mira/catalog.hpp"
#include "mira/lab.hpp"
#include "test_util.hpp"

using namespace mira;
using testutil::random_nonzero_rational;
using testutil::random_rational;

namespace {

const GaussianRational kI = GaussianRational::i();

RepParams random_params(Family f) {
  RepParams p;
  p.family = f;
  p.lambda = random_rational(8, 6);
  p.beta = random_nonzero_rational(8, 6);
  p.mu = random_rational(8, 6);
  p.nu = random_rational(8, 6);
  p.q = random_nonzero_rational(8, 6);
  std::uniform_int_distribution<int> sig(0, 1), nn(2, 6);
  p.sigma = sig(testutil::rng());
  p.n = nn(testutil::rng());
  return p;
}

SemidirectElement<double> mirab(double v1, double v2, double a, double b) {
  auto g = SemidirectElement<double>::identity(2);
  g.v << v1, v2;
  g.A << a, b, 0.0, 1.0;
  return g;
}

SemidirectElement<double> gl2(double a, double b, double c, double d) {
  auto g = SemidirectElement<double>::identity(2);
  g.A << a, b, c, d;
  return g;
}

}  // namespace

TEST_CASE("algebra rep operator assignments") {
  RepParams p;
  p.family = Family::Eta10;
  p.lambda = Rational(2);
  AlgebraRep r = build_algebra_rep(p);
  CHECK(op_equal(r.op(BasisLabel::E21), DiffOperator::mul(kI, -1)));
  CHECK(op_equal(r.op(BasisLabel::E12),
                 DiffOperator::mul(GaussianRational::i(Rational(2)), 1)));
  CHECK(r.op(BasisLabel::E22).is_zero());

  p.family = Family::Eta0Beta;
  p.beta = Rational(1);
  p.lambda = Rational(0);
  r = build_algebra_rep(p);
  DiffOperator expect = DiffOperator::mul(GaussianRational(Rational(-1, 2))) -
                        DiffOperator::deriv(1, GaussianRational(1), 1);
  CHECK(op_equal(r.op(BasisLabel::E11), expect));

  p.family = Family::DiscreteKirillov;
  p.n = 2;
  p.q = Rational(1);
  r = build_algebra_rep(p);
  DiffOperator e21 =
      DiffOperator::mul(GaussianRational(Rational(0), Rational(-3, 4)), -1) +
      DiffOperator::term(kI, 1, 2);
  CHECK(op_equal(r.op(BasisLabel::E21), e21));
}

TEST_CASE("inadmissible parameters are rejected") {
  RepParams p;
  p.family = Family::Eta0Beta;
  p.beta = Rational(0);
  CHECK_THROWS_AS(build_algebra_rep(p), std::invalid_argument);

  p = RepParams{};
  p.family = Family::DiscreteKirillov;
  p.n = 1;
  CHECK_THROWS_AS(build_algebra_rep(p), std::invalid_argument);
  p.n = 3;
  p.q = Rational(0);
  CHECK_THROWS_AS(build_algebra_rep(p), std::invalid_argument);
}

TEST_CASE("bracket homomorphism certified for every family") {
  for (Family f :
       {Family::Eta00Scalar, Family::Eta00, Family::Eta10, Family::Eta0Beta,
        Family::PiMu, Family::DiscreteKirillov, Family::PrincipalTilde}) {
    for (int sample = 0; sample < 6; ++sample) {
      RepParams p = random_params(f);
      auto rep = build_algebra_rep(p);
      auto check = bracket_check(rep);
      INFO(family_id(f), " sample ", sample, ": ", check.first_failure);
      CHECK(check.pass);
    }
  }
}

TEST_CASE("scalar matrices act trivially in the discrete series") {
  for (int n = 2; n <= 6; ++n) {
    RepParams p;
    p.family = Family::DiscreteKirillov;
    p.n = n;
    p.q = random_nonzero_rational();
    auto rep = build_algebra_rep(p);
    CHECK((rep.op(BasisLabel::E11) + rep.op(BasisLabel::E22)).is_zero());
  }
}

TEST_CASE("group actions: printed formulas") {
  TestFunction f = TestFunction::bump(Domain::PuncturedLine, 1.0, 2.0);
  RepParams p;
  p.family = Family::Eta00;
  GroupAction eta00{p};

  // e^{ibx} f(ax)
  auto g = mirab(0, 0, 1.5, 0.7);
  double x = 1.2;
  std::complex<double> expect =
      std::exp(std::complex<double>(0, 0.7 * x)) * f(1.5 * x);
  CHECK(std::abs(apply_group(eta00, g, f, x) - expect) < 1e-14);

  // identity acts trivially for every family with a group model
  for (Family fam : {Family::Eta00Scalar, Family::Eta00, Family::Eta10,
                     Family::Eta0Beta, Family::PiMu, Family::PrincipalTilde}) {
    RepParams q = random_params(fam);
    GroupAction act{q};
    TestFunction tf = default_test_set(build_algebra_rep(q).domain).front();
    double pt = tf.domain() == Domain::Singleton ? 0.0
               : 0.5 * (tf.support_lo() + tf.support_hi());
    auto id = SemidirectElement<double>::identity(2);
    CHECK(std::abs(apply_group(act, id, tf, pt) -
                   std::complex<double>(tf(pt))) < 1e-14);
  }

  // e^{i v1/x} e^{i lambda b x} f(x a)
  RepParams p10;
  p10.family = Family::Eta10;
  p10.lambda = Rational(3, 2);
  GroupAction eta10{p10};
  auto h = mirab(0.4, 9.0, 1.2, -0.3);
  expect = std::exp(std::complex<double>(0, 0.4 / x)) *
           std::exp(std::complex<double>(0, 1.5 * (-0.3) * x)) * f(x * 1.2);
  CHECK(std::abs(apply_group(eta10, h, f, x) - expect) < 1e-14);

  // discrete series has no printed group model
  RepParams pd;
  pd.family = Family::DiscreteKirillov;
  GroupAction dk{pd};
  CHECK_THROWS_AS(apply_group(dk, g, f, x), std::logic_error);
}

TEST_CASE("group homomorphism on random pairs") {
  std::uniform_real_distribution<double> coef(-0.6, 0.6), diag(0.5, 2.0);
  for (Family fam : {Family::Eta00Scalar, Family::Eta00, Family::Eta10,
                     Family::Eta0Beta, Family::PiMu, Family::PrincipalTilde}) {
    RepParams p = random_params(fam);
    GroupAction act{p};
    TestFunction f = default_test_set(build_algebra_rep(p).domain).front();
    std::uniform_real_distribution<double> xs(f.support_lo(), f.support_hi());
    for (int trial = 0; trial < 25; ++trial) {
      SemidirectElement<double> g, h;
      if (is_gl2_family(fam)) {
        g = gl2(diag(testutil::rng()), coef(testutil::rng()),
                coef(testutil::rng()) * 0.05, diag(testutil::rng()));
        h = gl2(diag(testutil::rng()), coef(testutil::rng()),
                coef(testutil::rng()) * 0.05, diag(testutil::rng()));
      } else {
        g = mirab(coef(testutil::rng()), coef(testutil::rng()),
                  diag(testutil::rng()), coef(testutil::rng()));
        h = mirab(coef(testutil::rng()), coef(testutil::rng()),
                  diag(testutil::rng()), coef(testutil::rng()));
      }
      double x = f.domain() == Domain::Singleton ? 0.0 : xs(testutil::rng());
      CHECK(homomorphism_residual(act, g, h, f, x) < 1e-12);
    }
  }
}

TEST_CASE("linkage: central differences reproduce the algebra operators") {
  std::vector<double> ts = {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
  for (Family fam : {Family::Eta00Scalar, Family::Eta00, Family::Eta10,
                     Family::Eta0Beta, Family::PiMu, Family::PrincipalTilde}) {
    RepParams p = random_params(fam);
    auto rep = build_algebra_rep(p);
    TestFunction f = default_test_set(rep.domain).front();
    double x = rep.domain == Domain::Singleton ? 0.0
               : (rep.domain == Domain::Line ? 0.37 : 1.37);
    for (BasisLabel y : kBasisLabels) {
      auto r = linkage_check(p, y, f, x, ts);
      INFO(family_id(fam), " ", basis_name(y), " slope=", r.slope,
           " max_error=", r.max_error);
      if (r.zero_op)
        CHECK(r.max_error < 1e-9);
      else {
        CHECK(r.slope > 1.8);
        CHECK(r.slope < 2.2);
      }
    }
  }
}

TEST_CASE("unitarity: norms are preserved") {
  // eta00 with A = diag(2,1): multiplicative Haar invariance
  RepParams p;
  p.family = Family::Eta00;
  GroupAction act{p};
  TestFunction f = TestFunction::bump(Domain::PuncturedLine, 1.0, 2.0);
  auto r = unitarity_check(act, mirab(0, 0, 2.0, 0.5), f);
  CHECK(r.deviation < 1e-9);

  // identity
  r = unitarity_check(act, SemidirectElement<double>::identity(2), f);
  CHECK(r.deviation < 1e-12);

  // eta0beta: |a|^{-1/2} Jacobian factor
  RepParams pb;
  pb.family = Family::Eta0Beta;
  pb.beta = Rational(1);
  pb.lambda = Rational(1, 3);
  GroupAction actb{pb};
  TestFunction fb = TestFunction::bump(Domain::Line, -1.0, 1.0);
  r = unitarity_check(actb, mirab(0.3, -0.2, 1.7, 0.0), fb);
  CHECK(r.deviation < 1e-9);

  // principal series Moebius action
  RepParams pp;
  pp.family = Family::PrincipalTilde;
  pp.mu = Rational(1, 4);
  pp.nu = Rational(2, 3);
  pp.sigma = 1;
  GroupAction actp{pp};
  r = unitarity_check(actp, gl2(2.0, 1.0 / 3, 1.0 / 5, 1.0), fb);
  CHECK(r.deviation < 1e-9);

  // pole inside the support window is rejected
  CHECK_THROWS_AS(unitarity_check(actp, gl2(0.1, 0.0, 1.0, 0.1), fb),
                  std::domain_error);
}
