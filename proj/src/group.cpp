#include "mira/group.hpp"

namespace mira {

SemidirectElement<double> exp_basis(BasisLabel dir, double t) {
  SemidirectElement<double> g = SemidirectElement<double>::identity(2);
  switch (dir) {
    case BasisLabel::E11:
      g.A(0, 0) = std::exp(t);
      break;
    case BasisLabel::E12:
      g.A(0, 1) = t;
      break;
    case BasisLabel::E21:
      g.v(0) = t;
      break;
    case BasisLabel::E22:
      g.v(1) = t;
      break;
  }
  return g;
}

Eigen::Matrix2d gl2_exp_basis(BasisLabel dir, double t) {
  Eigen::Matrix2d a = Eigen::Matrix2d::Identity();
  switch (dir) {
    case BasisLabel::E11:
      a(0, 0) = std::exp(t);
      break;
    case BasisLabel::E12:
      a(0, 1) = t;
      break;
    case BasisLabel::E21:
      a(1, 0) = t;
      break;
    case BasisLabel::E22:
      a(1, 1) = std::exp(t);
      break;
  }
  return a;
}

}  // namespace mira
