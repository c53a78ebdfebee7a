#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "mira/gaussian_rational.hpp"

namespace mira {

class TestFunction;

/// Finite formal sum of terms c * x^a * d^k/dx^k with Gaussian-rational
/// coefficients, integer (possibly negative) exponent a and derivative
/// order k >= 0. Closed under composition; exact throughout.
class DiffOperator {
 public:
  /// (exponent a, derivative order k)
  using Key = std::pair<int, int>;

  DiffOperator() = default;

  static DiffOperator term(const GaussianRational& c, int exponent,
                           int order) {
    DiffOperator d;
    d.add(exponent, order, c);
    return d;
  }
  /// c * x^a (multiplication operator)
  static DiffOperator mul(const GaussianRational& c, int exponent = 0) {
    return term(c, exponent, 0);
  }
  /// c * x^a * d^k
  static DiffOperator deriv(int order, const GaussianRational& c = 1,
                            int exponent = 0) {
    return term(c, exponent, order);
  }
  static DiffOperator zero() { return {}; }

  const std::map<Key, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_order() const {
    int m = 0;
    for (const auto& [key, c] : terms_) m = std::max(m, key.second);
    return m;
  }
  bool has_negative_exponent() const {
    for (const auto& [key, c] : terms_)
      if (key.first < 0) return true;
    return false;
  }

  void add(int exponent, int order, const GaussianRational& c) {
    if (order < 0) throw std::invalid_argument("DiffOperator: order < 0");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({exponent, order}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator r = a;
    for (const auto& [key, c] : b.terms_) r.add(key.first, key.second, c);
    return r;
  }
  friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator r = a;
    for (const auto& [key, c] : b.terms_) r.add(key.first, key.second, -c);
    return r;
  }
  friend DiffOperator operator*(const GaussianRational& c,
                                const DiffOperator& d) {
    DiffOperator r;
    for (const auto& [key, v] : d.terms_) r.add(key.first, key.second, c * v);
    return r;
  }
  DiffOperator operator-() const { return GaussianRational(-1) * *this; }

  friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  std::map<Key, GaussianRational> terms_;
};

/// Operator composition via
/// (x^a d^k)(x^b d^m) = sum_j C(k,j) fall(b,j) x^{a+b-j} d^{k+m-j},
/// with fall(b,j) = b(b-1)...(b-j+1) (valid for negative b as well).
DiffOperator compose(const DiffOperator& d1, const DiffOperator& d2);

inline DiffOperator commutator(const DiffOperator& d1, const DiffOperator& d2) {
  return compose(d1, d2) - compose(d2, d1);
}

inline bool op_equal(const DiffOperator& d1, const DiffOperator& d2) {
  return d1 == d2;
}

/// Evaluates sum c x^a f^(k)(x). Throws on x = 0 with a Laurent term and
/// when f cannot supply derivatives up to the operator's order.
std::complex<double> apply(const DiffOperator& d, const TestFunction& f,
                           double x);

}  // namespace mira
