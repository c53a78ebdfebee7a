#include "mira/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace mira {

void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  nodes.resize(n);
  weights.resize(n);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes(i) = x;
    weights(i) = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

double l2_norm(const std::function<std::complex<double>(double)>& g,
               Domain domain, double a, double b,
               const QuadratureSettings& settings) {
  if (domain == Domain::Singleton) return std::abs(g(0.0));
  if (!(a < b)) throw std::invalid_argument("l2_norm: empty window");
  if (domain == Domain::PuncturedLine && a <= 0 && b >= 0)
    throw std::invalid_argument("l2_norm: punctured window must exclude 0");

  Eigen::VectorXd x, w;
  gauss_legendre(settings.nodes, x, w);

  const double h = (b - a) / settings.panels;
  double acc = 0.0;
  for (int p = 0; p < settings.panels; ++p) {
    const double lo = a + p * h;
    const double c = lo + 0.5 * h, s = 0.5 * h;
    for (int i = 0; i < settings.nodes; ++i) {
      const double xi = c + s * x(i);
      double v = std::norm(g(xi));
      if (domain == Domain::PuncturedLine) v /= std::abs(xi);
      acc += s * w(i) * v;
    }
  }
  return std::sqrt(acc);
}

double l2_norm(const TestFunction& f, const QuadratureSettings& settings) {
  return l2_norm([&f](double x) { return std::complex<double>(f(x)); },
                 f.domain(), f.support_lo(), f.support_hi(), settings);
}

double loglog_slope(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("loglog_slope: need >= 2 matching points");
  Eigen::VectorXd lx = x.array().log();
  Eigen::VectorXd ly = y.array().log();
  const double mx = lx.mean(), my = ly.mean();
  const double sxx = (lx.array() - mx).square().sum();
  const double sxy = ((lx.array() - mx) * (ly.array() - my)).sum();
  return sxy / sxx;
}

}  // namespace mira
