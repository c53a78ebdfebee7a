#include "mira/catalog.hpp"

#include <cmath>

#include "mira/lie.hpp"

namespace mira {

namespace {

const GaussianRational kI = GaussianRational::i();

std::complex<double> unit_power(double base, int sigma,
                                std::complex<double> exponent) {
  // sgn(base)^sigma * |base|^exponent
  if (base == 0.0) throw std::domain_error("apply_group: singular multiplier");
  double s = (base < 0.0 && sigma == 1) ? -1.0 : 1.0;
  return s * std::exp(exponent * std::log(std::abs(base)));
}

}  // namespace

const char* family_id(Family f) {
  switch (f) {
    case Family::Eta00Scalar: return "eta00scalar";
    case Family::Eta00: return "eta00";
    case Family::Eta10: return "eta10";
    case Family::Eta0Beta: return "eta0beta";
    case Family::PiMu: return "piMu";
    case Family::DiscreteKirillov: return "discreteKirillov";
    case Family::PrincipalTilde: return "principalTilde";
  }
  return "?";
}

std::optional<Family> family_from_id(const std::string& id) {
  for (Family f :
       {Family::Eta00Scalar, Family::Eta00, Family::Eta10, Family::Eta0Beta,
        Family::PiMu, Family::DiscreteKirillov, Family::PrincipalTilde})
    if (id == family_id(f)) return f;
  return std::nullopt;
}

bool is_gl2_family(Family f) {
  return f == Family::PiMu || f == Family::DiscreteKirillov ||
         f == Family::PrincipalTilde;
}

void RepParams::validate() const {
  if (sigma != 0 && sigma != 1)
    throw std::invalid_argument("RepParams: sigma must be 0 or 1");
  if (family == Family::Eta0Beta && beta.is_zero())
    throw std::invalid_argument("RepParams: eta0beta requires beta != 0");
  if (family == Family::DiscreteKirillov) {
    if (n <= 1)
      throw std::invalid_argument("RepParams: discreteKirillov requires n > 1");
    if (q.is_zero())
      throw std::invalid_argument("RepParams: discreteKirillov requires q != 0");
  }
}

DiffOperator AlgebraRep::of(const LieElement& x) const {
  if (x.dim() != 2)
    throw std::invalid_argument("AlgebraRep::of: gl_2 element required");
  DiffOperator r;
  for (const auto& [ij, c] : x.coeffs()) {
    int idx = (ij.first - 1) * 2 + (ij.second - 1);
    r = r + GaussianRational(c) * ops[idx];
  }
  return r;
}

AlgebraRep build_algebra_rep(const RepParams& p) {
  p.validate();
  AlgebraRep rep;
  auto& [e11, e12, e21, e22] = rep.ops;
  const DiffOperator xdx = DiffOperator::deriv(1, GaussianRational(1), 1);

  switch (p.family) {
    case Family::Eta00Scalar:
      rep.bracket_tag = 0;
      rep.domain = Domain::Singleton;
      e11 = DiffOperator::mul(GaussianRational::i(p.lambda));
      break;
    case Family::Eta00:
      rep.bracket_tag = 0;
      rep.domain = Domain::PuncturedLine;
      e11 = xdx;
      e12 = DiffOperator::mul(kI, 1);
      break;
    case Family::Eta10:
      rep.bracket_tag = 0;
      rep.domain = Domain::PuncturedLine;
      e11 = xdx;
      e12 = DiffOperator::mul(GaussianRational::i(p.lambda), 1);
      e21 = DiffOperator::mul(kI, -1);
      break;
    case Family::Eta0Beta:
      rep.bracket_tag = 0;
      rep.domain = Domain::Line;
      // i*lambda - 1/2 - x d/dx
      e11 = DiffOperator::mul(GaussianRational(Rational(-1, 2), p.lambda)) -
            xdx;
      e12 = DiffOperator::deriv(1);
      e21 = DiffOperator::mul(GaussianRational::i(-p.beta), 1);
      e22 = DiffOperator::mul(GaussianRational::i(p.beta));
      break;
    case Family::PiMu:
      rep.bracket_tag = 1;
      rep.domain = Domain::Singleton;
      e11 = DiffOperator::mul(GaussianRational::i(p.mu));
      e22 = e11;
      break;
    case Family::DiscreteKirillov: {
      rep.bracket_tag = 1;
      rep.domain = Domain::PuncturedLine;
      e11 = xdx;
      e12 = DiffOperator::mul(GaussianRational::i(p.q), 1);
      // -i (n^2-1)/(4q) x^{-1} + i (1/q) x d^2
      Rational n2 = Rational(static_cast<long long>(p.n) * p.n - 1);
      e21 = DiffOperator::mul(GaussianRational::i(-(n2 / (Rational(4) * p.q))),
                              -1) +
            DiffOperator::term(GaussianRational::i(p.q.inverse()), 1, 2);
      e22 = -xdx;
      break;
    }
    case Family::PrincipalTilde:
      rep.bracket_tag = 1;
      rep.domain = Domain::Line;
      // i*mu - 1/2 - i*nu - x d/dx
      e11 = DiffOperator::mul(
                GaussianRational(Rational(-1, 2), p.mu - p.nu)) -
            xdx;
      e12 = DiffOperator::deriv(1);
      // -(1 + i*nu) x - x^2 d/dx
      e21 = DiffOperator::mul(-GaussianRational(Rational(1), p.nu), 1) -
            DiffOperator::deriv(1, GaussianRational(1), 2);
      // 1/2 + i*mu + x d/dx
      e22 = DiffOperator::mul(GaussianRational(Rational(1, 2), p.mu)) + xdx;
      break;
  }
  return rep;
}

std::complex<double> apply_group(
    const GroupAction& action, const SemidirectElement<double>& g,
    const std::function<std::complex<double>(double)>& f, double x) {
  const RepParams& p = action.params;
  p.validate();
  const double a = g.A(0, 0), b = g.A(0, 1);
  const std::complex<double> i1(0.0, 1.0);

  switch (p.family) {
    case Family::Eta00Scalar:
      return unit_power(a, p.sigma, i1 * p.lambda.to_double()) * f(x);
    case Family::Eta00:
      return std::exp(i1 * b * x) * f(a * x);
    case Family::Eta10: {
      if (x == 0.0) throw std::domain_error("apply_group: x = 0 on R*");
      const double v1 = g.v(0);
      return std::exp(i1 * v1 / x) *
             std::exp(i1 * p.lambda.to_double() * b * x) * f(x * a);
    }
    case Family::Eta0Beta: {
      const double v1 = g.v(0), v2 = g.v(1);
      const double beta = p.beta.to_double();
      return std::exp(i1 * beta * (-x * v1 + v2)) *
             unit_power(a, p.sigma,
                        std::complex<double>(-0.5, p.lambda.to_double())) *
             f((b + x) / a);
    }
    case Family::PiMu: {
      const double det = g.A.determinant();
      return unit_power(det, 0, i1 * p.mu.to_double()) * f(x);
    }
    case Family::DiscreteKirillov:
      throw std::logic_error(
          "apply_group: discreteKirillov has no group-level model");
    case Family::PrincipalTilde: {
      const double c = g.A(1, 0), d = g.A(1, 1);
      const double det = g.A.determinant();
      const double den = c * x + a;
      if (den == 0.0)
        throw std::domain_error("apply_group: singular Moebius denominator");
      return unit_power(det, 0,
                        std::complex<double>(0.5, p.mu.to_double())) *
             unit_power(den, p.sigma,
                        std::complex<double>(-1.0, -p.nu.to_double())) *
             f((d * x + b) / den);
    }
  }
  throw std::logic_error("apply_group: unknown family");
}

std::complex<double> apply_group(const GroupAction& action,
                                 const SemidirectElement<double>& g,
                                 const TestFunction& f, double x) {
  return apply_group(
      action, g, [&f](double y) { return std::complex<double>(f(y)); }, x);
}

CheckReport bracket_check(const AlgebraRep& rep) {
  CheckReport out;
  for (BasisLabel bx : kBasisLabels)
    for (BasisLabel by : kBasisLabels) {
      int xi = static_cast<int>(bx), yi = static_cast<int>(by);
      LieElement X = LieElement::basis(2, xi / 2 + 1, xi % 2 + 1);
      LieElement Y = LieElement::basis(2, yi / 2 + 1, yi % 2 + 1);
      LieElement lie = contracted_bracket(Rational(rep.bracket_tag), X, Y);
      DiffOperator lhs = commutator(rep.op(bx), rep.op(by));
      DiffOperator rhs = rep.of(lie);
      if (!op_equal(lhs, rhs)) {
        out.pass = false;
        out.first_failure = std::string("[") + basis_name(bx) + ", " +
                            basis_name(by) + "]: got " + lhs.str() +
                            ", expected " + rhs.str();
        return out;
      }
    }
  return out;
}

LinkageReport linkage_check(const RepParams& params, BasisLabel direction,
                            const TestFunction& f, double x,
                            const std::vector<double>& t_schedule) {
  params.validate();
  if (t_schedule.size() < 2)
    throw std::invalid_argument("linkage_check: schedule too short");
  GroupAction action{params};
  AlgebraRep rep = build_algebra_rep(params);
  const DiffOperator& op = rep.op(direction);

  auto group_at = [&](double t) {
    SemidirectElement<double> g = SemidirectElement<double>::identity(2);
    if (is_gl2_family(params.family))
      g.A = gl2_exp_basis(direction, t);
    else
      g = exp_basis(direction, t);
    return g;
  };

  LinkageReport out;
  out.zero_op = op.is_zero();
  std::complex<double> exact =
      out.zero_op ? std::complex<double>(0.0) : apply(op, f, x);

  for (double t : t_schedule) {
    if (t <= 0.0)
      throw std::invalid_argument("linkage_check: schedule must be positive");
    std::complex<double> fwd = apply_group(action, group_at(t), f, x);
    std::complex<double> bwd = apply_group(action, group_at(-t), f, x);
    std::complex<double> diff = (fwd - bwd) / (2.0 * t);
    out.errors.push_back(std::abs(diff - exact));
  }
  out.max_error = *std::max_element(out.errors.begin(), out.errors.end());

  if (!out.zero_op) {
    Eigen::VectorXd ts(t_schedule.size()), es(t_schedule.size());
    for (size_t i = 0; i < t_schedule.size(); ++i) {
      ts(i) = t_schedule[i];
      es(i) = std::max(out.errors[i], 1e-300);
    }
    out.slope = loglog_slope(ts, es);
  }
  return out;
}

namespace {

// Preimage of the support [lo,hi] under the action's argument map, i.e.
// the support of pi(g)f.
std::pair<double, double> transformed_support(const GroupAction& action,
                                              const SemidirectElement<double>& g,
                                              double lo, double hi) {
  const RepParams& p = action.params;
  const double a = g.A(0, 0), b = g.A(0, 1);
  switch (p.family) {
    case Family::Eta00:
    case Family::Eta10: {
      // argument x*a
      double u = lo / a, v = hi / a;
      return {std::min(u, v), std::max(u, v)};
    }
    case Family::Eta0Beta: {
      // argument (b + x)/a
      double u = a * lo - b, v = a * hi - b;
      return {std::min(u, v), std::max(u, v)};
    }
    case Family::PrincipalTilde: {
      // argument y = (dx + b)/(cx + a); inverse x = (b - a y)/(c y - d)
      const double c = g.A(1, 0), d = g.A(1, 1);
      auto inv = [&](double y) { return (b - a * y) / (c * y - d); };
      if (c != 0.0) {
        double pole = d / c;
        if (pole > lo && pole < hi)
          throw std::domain_error(
              "unitarity_check: transformed support unbounded");
      }
      double u = inv(lo), v = inv(hi);
      return {std::min(u, v), std::max(u, v)};
    }
    default:
      return {lo, hi};
  }
}

}  // namespace

UnitarityReport unitarity_check(const GroupAction& action,
                                const SemidirectElement<double>& g,
                                const TestFunction& f,
                                const QuadratureSettings& settings) {
  UnitarityReport out;
  const Domain dom = f.domain();
  out.norm_f = l2_norm(f, settings);

  if (dom == Domain::Singleton) {
    out.norm_gf = std::abs(apply_group(action, g, f, 0.0));
    out.deviation = std::abs(out.norm_gf - out.norm_f);
    return out;
  }

  auto [lo, hi] =
      transformed_support(action, g, f.support_lo(), f.support_hi());
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
    throw std::domain_error("unitarity_check: bad transformed support");
  if (dom == Domain::PuncturedLine && lo <= 0.0 && hi >= 0.0)
    throw std::domain_error(
        "unitarity_check: transformed support crosses the puncture");

  out.norm_gf = l2_norm(
      [&](double x) { return apply_group(action, g, f, x); }, dom, lo, hi,
      settings);
  out.deviation = std::abs(out.norm_gf - out.norm_f);
  return out;
}

double homomorphism_residual(const GroupAction& action,
                             const SemidirectElement<double>& g,
                             const SemidirectElement<double>& h,
                             const TestFunction& f, double x) {
  auto hf = [&](double y) { return apply_group(action, h, f, y); };
  std::complex<double> lhs = apply_group(action, g, hf, x);
  std::complex<double> rhs =
      apply_group(action, group_product(g, h), f, x);
  return std::abs(lhs - rhs);
}

}  // namespace mira
