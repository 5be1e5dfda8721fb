#include "kacrice/basis.hpp"

#include <algorithm>
#include <cmath>

namespace kacrice {

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Monomial:   return "monomial";
        case FamilyKind::Elliptic:   return "elliptic";
        case FamilyKind::Bergman:    return "bergman";
        case FamilyKind::Recurrence: return "recurrence";
    }
    return "unknown";
}

FamilyKind family_from_name(const std::string& name) {
    if (name == "monomial")   return FamilyKind::Monomial;
    if (name == "elliptic")   return FamilyKind::Elliptic;
    if (name == "bergman")    return FamilyKind::Bergman;
    if (name == "recurrence") return FamilyKind::Recurrence;
    throw std::invalid_argument("unknown basis family: " + name);
}

namespace {

// sqrt(binomial(n, k)) for k = 0..n.  The running product keeps full double
// accuracy as long as binomial(n, k) is representable; beyond that the
// log-gamma form takes over (and overflows of the square root itself are a
// hard error).
void elliptic_weights(int n, Eigen::VectorXd& w, Eigen::VectorXd& logw) {
    w.resize(n + 1);
    logw.resize(n + 1);
    double binom = 1.0;
    bool exact = true;
    for (int k = 0; k <= n; ++k) {
        logw[k] = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
        if (logw[k] > 708.0)
            throw std::overflow_error("elliptic weight sqrt(C(n,k)) exceeds the double range at n=" +
                                      std::to_string(n) + ", k=" + std::to_string(k));
        if (exact && std::isfinite(binom)) {
            w[k] = std::sqrt(binom);
        } else {
            exact = false;
            w[k] = std::exp(logw[k]);
        }
        binom *= static_cast<double>(n - k) / static_cast<double>(k + 1);
    }
}

} // namespace

BasisFamily make_basis(FamilyKind kind, int n, std::optional<RecurrenceSpec> recurrence_coeffs) {
    if (n < 0)
        throw std::invalid_argument("basis degree must be nonnegative, got " + std::to_string(n));
    if ((kind == FamilyKind::Recurrence) != recurrence_coeffs.has_value())
        throw std::invalid_argument("recurrence coefficients must be supplied exactly for the recurrence family");

    BasisFamily b;
    b.kind_ = kind;
    b.n_ = n;
    switch (kind) {
        case FamilyKind::Monomial:
            b.weights_ = Eigen::VectorXd::Ones(n + 1);
            b.log_weights_ = Eigen::VectorXd::Zero(n + 1);
            break;
        case FamilyKind::Elliptic:
            elliptic_weights(n, b.weights_, b.log_weights_);
            break;
        case FamilyKind::Bergman:
            b.weights_.resize(n + 1);
            b.log_weights_.resize(n + 1);
            for (int k = 0; k <= n; ++k) {
                b.weights_[k] = std::sqrt((k + 1) / M_PI);
                b.log_weights_[k] = 0.5 * (std::log(k + 1.0) - std::log(M_PI));
            }
            break;
        case FamilyKind::Recurrence:
            if (static_cast<int>(recurrence_coeffs->steps.size()) < n)
                throw std::invalid_argument("recurrence family of degree " + std::to_string(n) +
                                            " needs at least " + std::to_string(n) + " steps, got " +
                                            std::to_string(recurrence_coeffs->steps.size()));
            for (const auto& s : recurrence_coeffs->steps)
                if (!std::isfinite(s.a) || !std::isfinite(s.b) || !std::isfinite(s.c))
                    throw std::invalid_argument("recurrence coefficients must be finite");
            if (!std::isfinite(recurrence_coeffs->p0) || recurrence_coeffs->p0 == 0.0)
                throw std::invalid_argument("recurrence p0 must be finite and nonzero");
            b.rec_ = std::move(*recurrence_coeffs);
            break;
    }
    return b;
}

BasisEval eval_with_derivative(const BasisFamily& basis, double x) {
    BasisEval e;
    basis.eval<double>(x, e.values, e.derivs);
    return e;
}

ScaledEval eval_scaled(const BasisFamily& basis, double x) {
    if (!std::isfinite(x))
        throw std::invalid_argument("basis evaluation point must be finite");
    ScaledEval e;
    if (basis.kind_ == FamilyKind::Recurrence) {
        basis.eval<double>(x, e.values, e.derivs);
        if (!e.values.allFinite() || !e.derivs.allFinite())
            throw std::overflow_error("recurrence family overflowed at x=" + std::to_string(x));
        return e;
    }
    const int n = basis.n_;
    const double lx = (x == 0.0) ? 0.0 : std::log(std::abs(x));
    double maxlog = basis.log_weights_[0];
    if (x != 0.0)
        for (int k = 0; k <= n; ++k)
            maxlog = std::max(maxlog, basis.log_weights_[k] + k * lx);
    if (maxlog < 700.0) {
        basis.eval<double>(x, e.values, e.derivs);
        return e;
    }
    // Out-of-range magnitudes: evaluate log|f_k| = log w_k + k log|x| and
    // pull out a common power-of-two scale.  Scale-free downstream
    // quantities (calK, tau, frames) are unaffected.
    e.log2_scale = static_cast<int>(std::ceil((maxlog - 350.0) / M_LN2));
    const double shift = e.log2_scale * M_LN2;
    e.values.resize(n + 1);
    e.derivs.resize(n + 1);
    const double sgn = (x < 0.0) ? -1.0 : 1.0;
    double sk = 1.0; // sign(x)^k
    for (int k = 0; k <= n; ++k) {
        e.values[k] = sk * std::exp(basis.log_weights_[k] + k * lx - shift);
        e.derivs[k] = (k == 0) ? 0.0
                               : (sk / sgn) * k * std::exp(basis.log_weights_[k] + (k - 1) * lx - shift);
        sk *= sgn;
    }
    return e;
}

Eigen::VectorXd BasisFamily::power_coefficients(const Eigen::Ref<const Eigen::VectorXd>& coeffs) const {
    if (coeffs.size() != n_ + 1)
        throw std::invalid_argument("coefficient vector must have length n+1");
    if (kind_ != FamilyKind::Recurrence)
        return coeffs.cwiseProduct(weights_);

    // Expand the recurrence members in the power basis and accumulate.
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n_ + 1);
    Eigen::VectorXd pm1 = Eigen::VectorXd::Zero(n_ + 1);
    Eigen::VectorXd p0 = Eigen::VectorXd::Zero(n_ + 1);
    p0[0] = rec_.p0;
    out += coeffs[0] * p0;
    Eigen::VectorXd p1(n_ + 1);
    for (int k = 0; k < n_; ++k) {
        const auto& s = rec_.steps[k];
        p1.setZero();
        p1.tail(n_) = s.a * p0.head(n_);   // x * p_k
        p1 += s.b * p0 - s.c * pm1;
        out += coeffs[k + 1] * p1;
        pm1 = p0;
        p0 = p1;
    }
    return out;
}

BasisFamily BasisFamily::scaled(double c) const {
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::invalid_argument("basis scale factor must be positive and finite");
    BasisFamily b(*this);
    if (kind_ == FamilyKind::Recurrence) {
        b.rec_.p0 *= c; // the recurrence is linear, so scaling p0 scales every member
    } else {
        b.weights_ *= c;
        b.log_weights_.array() += std::log(c);
    }
    return b;
}

} // namespace kacrice
