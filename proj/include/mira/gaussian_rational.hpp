#pragma once

#include <complex>

#include "mira/rational.hpp"

namespace mira {

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  constexpr GaussianRational() = default;
  GaussianRational(Rational r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(r), im(i) {}
  GaussianRational(long long r) : re(r) {}

  static GaussianRational i(Rational v = Rational(1)) {
    return GaussianRational(Rational(0), v);
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend GaussianRational operator+(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& b) {
    return *this = *this + b;
  }
  GaussianRational& operator-=(const GaussianRational& b) {
    return *this = *this - b;
  }
  GaussianRational& operator*=(const GaussianRational& b) {
    return *this = *this * b;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  GaussianRational conj() const { return {re, -im}; }

  Rational norm2() const { return re * re + im * im; }

  friend GaussianRational operator/(const GaussianRational& a,
                                    const GaussianRational& b) {
    Rational n = b.norm2();
    if (n.is_zero())
      throw std::domain_error("GaussianRational: division by zero");
    GaussianRational num = a * b.conj();
    return {num.re / n, num.im / n};
  }

  double modulus() const {
    return std::abs(to_complex());
  }

  std::complex<double> to_complex() const {
    return {re.to_double(), im.to_double()};
  }

  std::string str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return im.str() + "*i";
    return re.str() + (im.sign() >= 0 ? "+" : "") + im.str() + "*i";
  }
};

}  // namespace mira
