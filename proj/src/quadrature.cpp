#include "kacrice/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace kacrice {

namespace {

GLRule compute_rule(int n) {
    GLRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    // Newton on P_n with the usual Chebyshev-flavored initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15 * (1.0 + std::abs(x))) {
                // one clean-up pass keeps the node at full precision
                double q0 = 1.0, q1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double q2 = ((2 * k - 1) * x * q1 - (k - 1) * q0) / k;
                    q0 = q1;
                    q1 = q2;
                }
                dp = n * (x * q1 - q0) / (x * x - 1.0);
                x -= q1 / dp;
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        r.nodes[n / 2] = 0.0;
        double p0 = 1.0, p1 = 0.0;
        for (int k = 2; k <= n; ++k) {
            const double p2 = (-(k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (-p0) / (-1.0);
        r.weights[n / 2] = 2.0 / (dp * dp);
    }
    return r;
}

std::mutex rule_mutex;
std::map<int, std::shared_ptr<const GLRule>> rule_cache;

} // namespace

const GLRule& gauss_legendre(int n) {
    if (n < 1)
        throw std::invalid_argument("Gauss-Legendre order must be positive");
    std::lock_guard<std::mutex> lock(rule_mutex);
    auto it = rule_cache.find(n);
    if (it == rule_cache.end())
        it = rule_cache.emplace(n, std::make_shared<const GLRule>(compute_rule(n))).first;
    return *it->second;
}

void append_panel(double a, double b, int n, std::vector<double>& xs, std::vector<double>& ws) {
    const GLRule& r = gauss_legendre(n);
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        xs.push_back(c + h * r.nodes[i]);
        ws.push_back(h * r.weights[i]);
    }
}

namespace {

double panel_gl(const std::function<double(double)>& f, double a, double b, const GLRule& r) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < r.nodes.size(); ++i)
        s += r.weights[i] * f(c + h * r.nodes[i]);
    return h * s;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int depth, const GLRule& lo, const GLRule& hi) {
    const double coarse = panel_gl(f, a, b, lo);
    const double fine = panel_gl(f, a, b, hi);
    if (std::abs(fine - coarse) <= tol || depth <= 0)
        return fine;
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * tol, depth - 1, lo, hi) +
           adapt(f, m, b, 0.5 * tol, depth - 1, lo, hi);
}

} // namespace

double adaptive_integrate(const std::function<double(double)>& f,
                          double a, double b, double abs_tol, int max_depth) {
    if (!(abs_tol > 0.0))
        throw std::invalid_argument("adaptive_integrate needs a positive tolerance");
    if (a == b)
        return 0.0;
    const GLRule& lo = gauss_legendre(7);
    const GLRule& hi = gauss_legendre(15);
    return adapt(f, a, b, abs_tol, max_depth, lo, hi);
}

} // namespace kacrice
