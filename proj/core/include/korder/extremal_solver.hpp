#pragma once

#include <optional>

#include "korder/order.hpp"

namespace korder {

// Extremal quantities of K(alpha): the bound M(alpha) on |Im f(z)/z| and the
// infimum Q_alpha(t) of Re[e^{it} f(z)/z]. Every root is found by bisection;
// the monotonicity that makes bisection valid is part of the theory.

/// Left side of the critical-point equation for v_gamma, 1/2 < alpha < 1:
///   [c cot(theta/2) + (1-c) cot A] (2 sin(theta/2))^{2c} sin A - cos theta,
/// with A = c pi + (1 - c) theta. It equals 2c v_gamma'(theta). The cot * sin
/// products are expanded so the pole of cot A never appears.
double critical_equation(const Order& ord, double theta);

/// H(theta) = c cot(theta/2) + (1 - c) cot(c pi + (1 - c) theta).
double critical_denominator(const Order& ord, double theta);

/// H'(theta) = -c / (2 sin^2(theta/2)) - (1 - c)^2 / sin^2(c pi + (1 - c) theta).
double critical_denominator_derivative(const Order& ord, double theta);

/// G(theta) = cos(theta)/H(theta) - sin(theta); M(alpha) = G(theta_alpha)/(2c).
double critical_profile(const Order& ord, double theta);

/// The unique zero theta_alpha of critical_equation in (0, pi), where the
/// upper boundary reaches its highest point. Requires 1/2 < alpha < 1.
/// Throws SolverFailure if no sign change, or more than one, is found.
double critical_theta(const Order& ord);

/// M(alpha) for 1/2 <= alpha < 1; pi/2 at alpha = 1/2 (a supremum).
double im_bound(const Order& ord);

/// theta in (0, pi] with turning_angle(theta) = y, for
/// y in ((1 - alpha) pi + 1e-9, pi]. Requires 0 < alpha < 1.
double turning_inverse(const Order& ord, double y);

/// Extended real with an explicit minus-infinity tag.
class ExtendedReal {
public:
    static ExtendedReal finite(double v) { return ExtendedReal(false, v); }
    static ExtendedReal minus_infinity() { return ExtendedReal(true, 0.0); }

    bool is_minus_infinity() const noexcept { return minus_infinity_; }
    /// Throws DomainError for the minus-infinity sentinel.
    double value() const;

    friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

private:
    ExtendedReal(bool neg_inf, double v) : minus_infinity_(neg_inf), value_(v) {}
    bool minus_infinity_;
    double value_;
};

enum class QCase { interior_critical, borderline, closed_form, unbounded_below };

const char* to_string(QCase c) noexcept;

struct QResult {
    ExtendedReal value;
    QCase case_tag;
    std::optional<double> theta0;  // present iff case_tag == interior_critical
};

/// Q_alpha(t) = inf over f in K(alpha), z in the disk, of Re[e^{it} f(z)/z].
/// t is reduced to [0, pi] by 2 pi periodicity and Q(-t) = Q(t).
QResult q_infimum(const Order& ord, double t);

/// Absolute band around alpha * pi inside which t counts as the borderline case.
inline constexpr double kBorderlineBand = 1e-12;

}  // namespace korder
