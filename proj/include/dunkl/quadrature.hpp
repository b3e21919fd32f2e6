#pragma once

#include <Eigen/Core>

#include <functional>

namespace dunkl {

struct GaussRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

/// Gauss-Legendre rule on [-1, 1] via the Golub-Welsch eigenproblem.
GaussRule gauss_legendre(int order);

/// Sum of `rule` applied on `panels` equal sub-intervals of [a, b].
double integrate_composite(const std::function<double(double)>& f, double a, double b, int panels,
                           const GaussRule& rule);

/// Adaptive Simpson with Richardson correction; tol is absolute.
double integrate_adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                                  int max_depth = 50);

}  // namespace dunkl
