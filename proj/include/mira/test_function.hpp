#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace mira {

enum class Domain {
  Line,           // L^2(R, dx)
  PuncturedLine,  // L^2(R*, dx/|x|)
  Singleton       // one-point space, counting measure
};

inline const char* domain_name(Domain d) {
  switch (d) {
    case Domain::Line: return "line";
    case Domain::PuncturedLine: return "punctured";
    case Domain::Singleton: return "singleton";
  }
  return "?";
}

/// Smooth compactly supported test vector carried as an order-2 jet:
/// closed-form f, f', f'' plus the support interval and the measure tag.
class TestFunction {
 public:
  using Evaluator = std::function<double(double)>;

  TestFunction(std::string id, Domain domain, double a, double b, Evaluator f0,
               Evaluator f1, Evaluator f2)
      : id_(std::move(id)),
        domain_(domain),
        a_(a),
        b_(b),
        f_{std::move(f0), std::move(f1), std::move(f2)} {
    if (domain == Domain::PuncturedLine && a_ <= 0 && b_ >= 0)
      throw std::invalid_argument(
          "TestFunction: punctured-line support must exclude 0");
  }

  const std::string& id() const { return id_; }
  Domain domain() const { return domain_; }
  double support_lo() const { return a_; }
  double support_hi() const { return b_; }
  int jet_order() const { return 2; }

  double deriv(int k, double x) const {
    if (k < 0 || k > 2)
      throw std::invalid_argument("TestFunction: jet order insufficient");
    if (x <= a_ || x >= b_) return 0.0;
    return f_[k](x);
  }
  double operator()(double x) const { return deriv(0, x); }

  /// The standard bump exp(1/(u^2-1)) with u the affine map of [a,b] onto
  /// (-1,1), together with its first two derivatives.
  static TestFunction bump(Domain domain, double a, double b);

  /// Constant 1 on the one-point space.
  static TestFunction singleton_unit();

 private:
  std::string id_;
  Domain domain_;
  double a_, b_;
  Evaluator f_[3];
};

}  // namespace mira
