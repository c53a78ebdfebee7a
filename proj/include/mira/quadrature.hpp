#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "mira/test_function.hpp"

namespace mira {

struct QuadratureSettings {
  int panels = 16;
  int nodes = 32;
  int sup_grid = 1001;
};

/// Gauss-Legendre nodes and weights on [-1,1] (Newton on the Legendre
/// recurrence).
void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

/// sqrt( integral_a^b |g(x)|^2 dmu ) with dmu = dx (Line) or dx/|x|
/// (PuncturedLine), composite Gauss-Legendre with the given panel/node
/// counts. Domain::Singleton returns |g(0)|.
double l2_norm(const std::function<std::complex<double>(double)>& g,
               Domain domain, double a, double b,
               const QuadratureSettings& settings = {});

/// Norm of a test function in its own measure.
double l2_norm(const TestFunction& f, const QuadratureSettings& settings = {});

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

}  // namespace mira
