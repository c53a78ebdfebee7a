#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mira/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<mira::Rational> {
  using Real = mira::Rational;
  using NonInteger = mira::Rational;
  using Nested = mira::Rational;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 10
  };
  static Real epsilon() { return mira::Rational(0); }
  static Real dummy_precision() { return mira::Rational(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace mira {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Gauss-Jordan inverse; works for exact scalars (pivot = any nonzero entry)
/// as well as floating point.
template <class Scalar>
MatrixX<Scalar> gauss_jordan_inverse(MatrixX<Scalar> a) {
  const auto n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse: square matrix required");
  MatrixX<Scalar> inv = MatrixX<Scalar>::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!(a(r, col) == Scalar(0)) &&
          (piv < 0 || abs(a(piv, col)) < abs(a(r, col)))) {
        piv = r;
      }
    if (piv < 0) throw std::domain_error("inverse: singular matrix");
    a.row(piv).swap(a.row(col));
    inv.row(piv).swap(inv.row(col));
    Scalar p = a(col, col);
    for (Eigen::Index c = 0; c < n; ++c) {
      a(col, c) = a(col, c) / p;
      inv(col, c) = inv(col, c) / p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == Scalar(0)) continue;
      Scalar f = a(r, col);
      for (Eigen::Index c = 0; c < n; ++c) {
        a(r, c) = a(r, c) - f * a(col, c);
        inv(r, c) = inv(r, c) - f * inv(col, c);
      }
    }
  }
  return inv;
}

/// Element (v, A) of R^n semidirect M_n, with M_n the invertible matrices
/// whose last row is (0,...,0,1). Templated on the scalar so exact group
/// arithmetic (Rational) and numeric one-parameter subgroups (double) share
/// one implementation.
template <class Scalar>
struct SemidirectElement {
  VectorX<Scalar> v;
  MatrixX<Scalar> A;

  int dim() const { return static_cast<int>(v.size()); }

  static SemidirectElement identity(int n) {
    SemidirectElement g;
    g.v = VectorX<Scalar>::Zero(n);
    g.A = MatrixX<Scalar>::Identity(n, n);
    return g;
  }

  bool last_row_ok() const {
    const auto n = A.rows();
    for (Eigen::Index j = 0; j + 1 < n; ++j)
      if (!(A(n - 1, j) == Scalar(0))) return false;
    return A(n - 1, n - 1) == Scalar(1);
  }
};

/// (v, A)(u, B) = (v + (A^{-1})^T u, A B).
template <class Scalar>
SemidirectElement<Scalar> group_product(const SemidirectElement<Scalar>& g,
                                        const SemidirectElement<Scalar>& h) {
  if (g.dim() != h.dim())
    throw std::invalid_argument("group_product: dimension mismatch");
  SemidirectElement<Scalar> r;
  MatrixX<Scalar> ainv = gauss_jordan_inverse<Scalar>(g.A);
  r.v = g.v + ainv.transpose() * h.v;
  r.A = g.A * h.A;
  return r;
}

/// (v, A)^{-1} = (-A^T v, A^{-1}).
template <class Scalar>
SemidirectElement<Scalar> group_inverse(const SemidirectElement<Scalar>& g) {
  SemidirectElement<Scalar> r;
  r.v = -(g.A.transpose() * g.v);
  r.A = gauss_jordan_inverse<Scalar>(g.A);
  return r;
}

enum class BasisLabel { E11, E12, E21, E22 };

inline const char* basis_name(BasisLabel b) {
  switch (b) {
    case BasisLabel::E11: return "e11";
    case BasisLabel::E12: return "e12";
    case BasisLabel::E21: return "e21";
    case BasisLabel::E22: return "e22";
  }
  return "?";
}

constexpr BasisLabel kBasisLabels[4] = {BasisLabel::E11, BasisLabel::E12,
                                        BasisLabel::E21, BasisLabel::E22};

/// One-parameter subgroups of R^2 semidirect M_2 through the four basis
/// directions: e11 -> ((0,0), diag(e^t,1)), e12 -> ((0,0), [[1,t],[0,1]]),
/// e21 -> ((t,0), I), e22 -> ((0,t), I).
SemidirectElement<double> exp_basis(BasisLabel dir, double t);

/// One-parameter subgroups of GL_2(R) through the basis directions
/// (standard matrix exponentials), used for the GL_2-level families.
Eigen::Matrix2d gl2_exp_basis(BasisLabel dir, double t);

}  // namespace mira
