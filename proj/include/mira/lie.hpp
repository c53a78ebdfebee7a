#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mira/rational.hpp"

namespace mira {

/// Element of gl_n(R) as a finitely supported rational coefficient vector
/// over the standard basis {e_ij}, indices 1-based.
class LieElement {
 public:
  using Index = std::pair<int, int>;

  explicit LieElement(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("LieElement: n must be >= 2");
  }

  static LieElement basis(int n, int i, int j) {
    LieElement x(n);
    x.add(i, j, Rational(1));
    return x;
  }

  int dim() const { return n_; }
  const std::map<Index, Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void add(int i, int j, const Rational& c) {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw std::out_of_range("LieElement: index out of range");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  bool is_zero() const { return coeffs_.empty(); }

  friend LieElement operator+(const LieElement& a, const LieElement& b) {
    check_dims(a, b);
    LieElement r = a;
    for (const auto& [ij, c] : b.coeffs_) r.add(ij.first, ij.second, c);
    return r;
  }
  friend LieElement operator-(const LieElement& a, const LieElement& b) {
    check_dims(a, b);
    LieElement r = a;
    for (const auto& [ij, c] : b.coeffs_) r.add(ij.first, ij.second, -c);
    return r;
  }
  friend LieElement operator*(const Rational& c, const LieElement& x) {
    LieElement r(x.n_);
    for (const auto& [ij, v] : x.coeffs_) r.add(ij.first, ij.second, c * v);
    return r;
  }
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

  static void check_dims(const LieElement& a, const LieElement& b) {
    if (a.n_ != b.n_)
      throw std::invalid_argument("LieElement: dimension mismatch");
  }

 private:
  int n_;
  std::map<Index, Rational> coeffs_;
};

/// Splitting of gl_n into the mirabolic subalgebra m_n (rows 1..n-1) and
/// the complement spanned by the last row.
struct ContractionSplit {
  int n;
  explicit ContractionSplit(int n_) : n(n_) {}
  bool in_subalgebra(int i, int /*j*/) const { return i != n; }
  bool in_complement(int i, int j) const { return !in_subalgebra(i, j); }
};

/// [e_ij, e_kl] = d_jk e_il - d_li e_kj, extended bilinearly.
LieElement standard_bracket(const LieElement& x, const LieElement& y);

/// t_eps scales last-row coefficients by eps (or 1/eps when inverse).
LieElement contraction_map(const Rational& eps, const LieElement& x,
                           bool inverse = false);

/// The eps-deformed bracket; eps = 0 gives the contracted (limit) bracket.
/// On basis elements: [e_ij, e_kl]_eps =
///   eps^{[k=n]} d_jk e_il - eps^{[i=n]} d_li e_kj.
LieElement contracted_bracket(const Rational& eps, const LieElement& x,
                              const LieElement& y);

/// Same bracket computed from the definition t_eps^{-1}[t_eps x, t_eps y];
/// requires eps != 0.
LieElement contracted_bracket_by_definition(const Rational& eps,
                                            const LieElement& x,
                                            const LieElement& y);

struct JacobiReport {
  bool pass = true;
  std::string first_failure;  // empty when pass
};

/// Exhaustive antisymmetry + Jacobi verification of [,]_eps over all basis
/// pairs/triples of gl_n.
JacobiReport jacobi_check(int n, const Rational& eps);

}  // namespace mira
