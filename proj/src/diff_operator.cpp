#include "mira/diff_operator.hpp"

#include <cmath>
#include <sstream>

#include "mira/test_function.hpp"

namespace mira {

namespace {

Rational binomial(int k, int j) {
  Rational r(1);
  for (int t = 0; t < j; ++t) r = r * Rational(k - t) / Rational(t + 1);
  return r;
}

// fall(b, j) = b(b-1)...(b-j+1), same product for negative b
Rational falling(int b, int j) {
  Rational r(1);
  for (int t = 0; t < j; ++t) r *= Rational(b - t);
  return r;
}

}  // namespace

DiffOperator compose(const DiffOperator& d1, const DiffOperator& d2) {
  DiffOperator r;
  for (const auto& [key1, c1] : d1.terms()) {
    const auto [a, k] = key1;
    for (const auto& [key2, c2] : d2.terms()) {
      const auto [b, m] = key2;
      for (int j = 0; j <= k; ++j) {
        Rational f = binomial(k, j) * falling(b, j);
        if (f.is_zero()) continue;
        r.add(a + b - j, k + m - j, GaussianRational(f) * c1 * c2);
      }
    }
  }
  return r;
}

std::complex<double> apply(const DiffOperator& d, const TestFunction& f,
                           double x) {
  std::complex<double> acc = 0.0;
  for (const auto& [key, c] : d.terms()) {
    const auto [a, k] = key;
    if (a < 0 && x == 0.0)
      throw std::domain_error("apply: singular evaluation at x = 0");
    if (k > f.jet_order())
      throw std::invalid_argument("apply: jet order insufficient");
    acc += c.to_complex() * std::pow(x, a) * f.deriv(k, x);
  }
  return acc;
}

std::string DiffOperator::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const auto [a, k] = key;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (a != 0) os << "*x^" << a;
    if (k > 0) os << "*d^" << k;
  }
  return os.str();
}

}  // namespace mira
