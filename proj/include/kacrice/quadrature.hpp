#pragma once

#include <Eigen/Core>

#include <functional>

namespace kacrice {

/// Gauss-Legendre rule on [-1, 1].
struct GLRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

/// Rule of the given order (cached, thread-safe).
const GLRule& gauss_legendre(int n);

/// Nodes/weights of the n-point rule mapped to [a, b], appended to xs/ws.
void append_panel(double a, double b, int n,
                  std::vector<double>& xs, std::vector<double>& ws);

/// Adaptive quadrature of f over the finite interval [a, b] to the given
/// absolute tolerance (GL15 with an embedded GL7 error estimate, bisecting
/// until the local estimate fits the proportional budget).
double adaptive_integrate(const std::function<double(double)>& f,
                          double a, double b, double abs_tol, int max_depth = 48);

} // namespace kacrice
