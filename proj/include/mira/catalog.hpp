#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mira/diff_operator.hpp"
#include "mira/group.hpp"
#include "mira/quadrature.hpp"
#include "mira/test_function.hpp"

namespace mira {

/// The complete list of unitary irreducible families for R^2 x| M_2
/// (eta*) together with the GL_2(R) families used to contract onto them.
enum class Family {
  Eta00Scalar,      // one-dimensional characters of M_2
  Eta00,            // infinite-dimensional rep trivial on R^2
  Eta10,            // orbit of chi_(1,0)
  Eta0Beta,         // orbit of chi_(0,beta)
  PiMu,             // |det|^{i mu} characters of GL_2
  DiscreteKirillov, // discrete series in the Kirillov model, q-twisted
  PrincipalTilde    // twisted principal series of GL_2
};

const char* family_id(Family f);
std::optional<Family> family_from_id(const std::string& id);

/// True for the families represented on GL_2 (bracket tag 1).
bool is_gl2_family(Family f);

struct RepParams {
  Family family = Family::Eta00;
  Rational lambda{0};
  Rational beta{1};
  Rational mu{0};
  Rational nu{0};
  Rational q{1};
  int sigma = 0;
  int n = 2;

  /// Throws std::invalid_argument on inadmissible parameters
  /// (beta = 0, q = 0, n <= 1, sigma outside {0,1}).
  void validate() const;
};

/// Operator assignment e_ij -> DiffOperator together with the bracket it
/// must intertwine: tag 0 = contracted bracket of R^2 x| m_2, tag 1 = gl_2.
struct AlgebraRep {
  int bracket_tag = 0;
  Domain domain = Domain::Line;
  std::array<DiffOperator, 4> ops;  // indexed by BasisLabel order

  const DiffOperator& op(BasisLabel b) const {
    return ops[static_cast<int>(b)];
  }
  /// Linear extension to arbitrary rational combinations of the basis.
  DiffOperator of(const class LieElement& x) const;
};

AlgebraRep build_algebra_rep(const RepParams& params);

struct GroupAction {
  RepParams params;
};

/// Evaluates the group-level transform at x; f is a value-only callable so
/// actions compose. Throws for DiscreteKirillov (no printed group model)
/// and on singular evaluations.
std::complex<double> apply_group(
    const GroupAction& action, const SemidirectElement<double>& g,
    const std::function<std::complex<double>(double)>& f, double x);

std::complex<double> apply_group(const GroupAction& action,
                                 const SemidirectElement<double>& g,
                                 const TestFunction& f, double x);

struct CheckReport {
  bool pass = true;
  std::string first_failure;
};

/// Certifies [rep(X), rep(Y)] = rep([X,Y]_tag) on all 16 ordered basis
/// pairs, exactly.
CheckReport bracket_check(const AlgebraRep& rep);

struct LinkageReport {
  bool zero_op = false;   // algebra operator is 0; errors are raw differences
  double slope = 0.0;     // log-log slope of central-difference error vs t
  double max_error = 0.0;
  std::vector<double> errors;
};

/// Central differences of t -> (pi(exp(t Y))f)(x) against the algebra
/// operator; error should scale as O(t^2).
LinkageReport linkage_check(const RepParams& params, BasisLabel direction,
                            const TestFunction& f, double x,
                            const std::vector<double>& t_schedule);

struct UnitarityReport {
  double norm_f = 0.0;
  double norm_gf = 0.0;
  double deviation = 0.0;
};

/// | ||pi(g)f|| - ||f|| | in the family's own L^2 measure. The quadrature
/// window is the exact preimage of the support under the action's argument
/// map; throws if that window is unbounded or hits a singular point.
UnitarityReport unitarity_check(const GroupAction& action,
                                const SemidirectElement<double>& g,
                                const TestFunction& f,
                                const QuadratureSettings& settings = {});

/// |pi(g)(pi(h)f)(x) - pi(gh)(f)(x)|.
double homomorphism_residual(const GroupAction& action,
                             const SemidirectElement<double>& g,
                             const SemidirectElement<double>& h,
                             const TestFunction& f, double x);

}  // namespace mira
