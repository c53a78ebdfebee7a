#include "mira/lie.hpp"

#include <sstream>

namespace mira {

std::string LieElement::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    if (c != Rational(1)) os << "(" << c.str() << ")*";
    os << "e_" << ij.first << ij.second;
  }
  return os.str();
}

LieElement standard_bracket(const LieElement& x, const LieElement& y) {
  LieElement::check_dims(x, y);
  LieElement r(x.dim());
  for (const auto& [ij, cx] : x.coeffs()) {
    auto [i, j] = ij;
    for (const auto& [kl, cy] : y.coeffs()) {
      auto [k, l] = kl;
      Rational c = cx * cy;
      if (j == k) r.add(i, l, c);
      if (l == i) r.add(k, j, -c);
    }
  }
  return r;
}

LieElement contraction_map(const Rational& eps, const LieElement& x,
                           bool inverse) {
  if (eps.is_zero())
    throw std::invalid_argument("contraction_map: eps must be nonzero");
  const int n = x.dim();
  const Rational scale = inverse ? eps.inverse() : eps;
  LieElement r(n);
  for (const auto& [ij, c] : x.coeffs())
    r.add(ij.first, ij.second, ij.first == n ? scale * c : c);
  return r;
}

LieElement contracted_bracket(const Rational& eps, const LieElement& x,
                              const LieElement& y) {
  LieElement::check_dims(x, y);
  const int n = x.dim();
  LieElement r(n);
  for (const auto& [ij, cx] : x.coeffs()) {
    auto [i, j] = ij;
    for (const auto& [kl, cy] : y.coeffs()) {
      auto [k, l] = kl;
      Rational c = cx * cy;
      if (j == k) r.add(i, l, k == n ? eps * c : c);
      if (l == i) r.add(k, j, i == n ? -(eps * c) : -c);
    }
  }
  return r;
}

LieElement contracted_bracket_by_definition(const Rational& eps,
                                            const LieElement& x,
                                            const LieElement& y) {
  return contraction_map(
      eps, standard_bracket(contraction_map(eps, x), contraction_map(eps, y)),
      /*inverse=*/true);
}

JacobiReport jacobi_check(int n, const Rational& eps) {
  if (n < 2) throw std::invalid_argument("jacobi_check: n must be >= 2");
  std::vector<LieElement> basis;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      basis.push_back(LieElement::basis(n, i, j));
      names.push_back("e_" + std::to_string(i) + std::to_string(j));
    }

  JacobiReport rep;
  const size_t d = basis.size();
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) {
      LieElement ab = contracted_bracket(eps, basis[a], basis[b]);
      LieElement ba = contracted_bracket(eps, basis[b], basis[a]);
      if (!(ab + ba).is_zero()) {
        rep.pass = false;
        rep.first_failure =
            "antisymmetry fails at (" + names[a] + ", " + names[b] + ")";
        return rep;
      }
    }
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b)
      for (size_t c = 0; c < d; ++c) {
        LieElement s =
            contracted_bracket(eps, basis[a],
                               contracted_bracket(eps, basis[b], basis[c])) +
            contracted_bracket(eps, basis[b],
                               contracted_bracket(eps, basis[c], basis[a])) +
            contracted_bracket(eps, basis[c],
                               contracted_bracket(eps, basis[a], basis[b]));
        if (!s.is_zero()) {
          rep.pass = false;
          rep.first_failure = "Jacobi fails at (" + names[a] + ", " +
                              names[b] + ", " + names[c] + ")";
          return rep;
        }
      }
  return rep;
}

}  // namespace mira
