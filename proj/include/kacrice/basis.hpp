#pragma once

#include <Eigen/Core>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kacrice {

template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

enum class FamilyKind { Monomial, Elliptic, Bergman, Recurrence };

std::string family_name(FamilyKind kind);
FamilyKind family_from_name(const std::string& name);

/// One step of a three-term recurrence p_{k+1}(x) = (a x + b) p_k(x) - c p_{k-1}(x).
struct RecurrenceStep {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// Defines a polynomial family through p_{-1} = 0, p_0 = constant and a
/// sequence of recurrence steps (steps[k] produces p_{k+1}).
struct RecurrenceSpec {
    double p0 = 1.0;
    std::vector<RecurrenceStep> steps;
};

/// A finite spanning family f_0, ..., f_n.  The three power families are
/// weighted monomials f_k(x) = w_k x^k; the recurrence family is built
/// from a user-supplied three-term recurrence.  Immutable after
/// construction, safe to share across threads.
class BasisFamily {
public:
    FamilyKind kind() const { return kind_; }
    int degree() const { return n_; }
    int size() const { return n_ + 1; }

    /// Monomial weights w_k (power families only).
    const Eigen::VectorXd& weights() const { return weights_; }

    /// Evaluates all members and their first derivatives at x.
    /// Power families overflow for |x| large enough that |w_n x^n|
    /// exceeds the double range; kernel computations use eval_scaled.
    template <typename Scalar>
    void eval(Scalar x, VecX<Scalar>& values, VecX<Scalar>& derivs) const;

    /// Monomial coefficients of sum_k coeffs[k] * f_k, lowest power first.
    Eigen::VectorXd power_coefficients(const Eigen::Ref<const Eigen::VectorXd>& coeffs) const;

    /// Same family with every member multiplied by c > 0.
    BasisFamily scaled(double c) const;

    friend BasisFamily make_basis(FamilyKind kind, int n, std::optional<RecurrenceSpec> rec);
    friend struct ScaledEval;
    friend ScaledEval eval_scaled(const BasisFamily& basis, double x);

private:
    BasisFamily() = default;

    FamilyKind kind_ = FamilyKind::Monomial;
    int n_ = 0;
    Eigen::VectorXd weights_;     // power families: f_k = weights_[k] x^k
    Eigen::VectorXd log_weights_; // log w_k, used when direct evaluation would overflow
    RecurrenceSpec rec_;
};

/// Builds a family.  recurrence_coeffs must be present exactly when
/// kind == Recurrence and must supply at least n steps.
BasisFamily make_basis(FamilyKind kind, int n,
                       std::optional<RecurrenceSpec> recurrence_coeffs = std::nullopt);

struct BasisEval {
    Eigen::VectorXd values;
    Eigen::VectorXd derivs;
};

/// Member values and derivatives at x as parallel vectors
/// (entry k is the pair (f_k(x), f_k'(x))).
BasisEval eval_with_derivative(const BasisFamily& basis, double x);

/// Member values/derivatives premultiplied by 2^(-log2_scale) so that the
/// largest magnitude stays well inside the double range.  log2_scale is 0
/// whenever direct evaluation is safe.
struct ScaledEval {
    Eigen::VectorXd values;
    Eigen::VectorXd derivs;
    int log2_scale = 0;
};

ScaledEval eval_scaled(const BasisFamily& basis, double x);

// --- implementation ---

template <typename Scalar>
void BasisFamily::eval(Scalar x, VecX<Scalar>& values, VecX<Scalar>& derivs) const {
    if (!std::isfinite(static_cast<double>(x)))
        throw std::invalid_argument("basis evaluation point must be finite");
    values.resize(n_ + 1);
    derivs.resize(n_ + 1);
    if (kind_ != FamilyKind::Recurrence) {
        Scalar p = Scalar(1);      // x^k
        Scalar pprev = Scalar(0);  // x^(k-1)
        for (int k = 0; k <= n_; ++k) {
            const Scalar w = Scalar(weights_[k]);
            values[k] = w * p;
            derivs[k] = w * Scalar(k) * pprev;
            pprev = p;
            p *= x;
        }
        return;
    }
    Scalar pm1 = Scalar(0), p0 = Scalar(rec_.p0);
    Scalar dm1 = Scalar(0), d0 = Scalar(0);
    values[0] = p0;
    derivs[0] = d0;
    for (int k = 0; k < n_; ++k) {
        const Scalar a = Scalar(rec_.steps[k].a);
        const Scalar b = Scalar(rec_.steps[k].b);
        const Scalar c = Scalar(rec_.steps[k].c);
        const Scalar p1 = (a * x + b) * p0 - c * pm1;
        const Scalar d1 = a * p0 + (a * x + b) * d0 - c * dm1;
        values[k + 1] = p1;
        derivs[k + 1] = d1;
        pm1 = p0; p0 = p1;
        dm1 = d0; d0 = d1;
    }
}

} // namespace kacrice
