#include "korder/extremal_solver.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "korder/boundary_geometry.hpp"
#include "korder/error.hpp"

namespace korder {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

void require_bounded_order(const Order& ord) {
    if (!(ord.alpha() > 0.5)) throw DomainError("critical equation needs 1/2 < alpha < 1");
}

// Bisection on an increasing function, theta in (0, pi]. Brackets from below
// by shrinking geometrically, then bisects geometrically while the bracket
// spans more than a factor 2 and arithmetically after that.
double invert_turning(const Order& ord, double y) {
    if (y >= kPi) return kPi;
    double lo = 1e-3;
    while (lo > 1e-200 && turning_angle(ord, lo) >= y) lo *= 1.0 / 16.0;
    double hi = kPi;
    for (int iter = 0; iter < 400; ++iter) {
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
        const double mid = hi > 2.0 * lo ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
        if (turning_angle(ord, mid) < y) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double ExtendedReal::value() const {
    if (minus_infinity_) throw DomainError("value is minus infinity");
    return value_;
}

const char* to_string(QCase c) noexcept {
    switch (c) {
        case QCase::interior_critical: return "interior-critical";
        case QCase::borderline: return "borderline";
        case QCase::closed_form: return "closed-form";
        case QCase::unbounded_below: return "unbounded-below";
    }
    return "unknown";
}

double critical_equation(const Order& ord, double theta) {
    require_bounded_order(ord);
    if (!(theta > 0.0 && theta <= kPi)) throw DomainError("critical equation needs theta in (0, pi]");
    const double c = ord.c();
    const double a = c * kPi + (1.0 - c) * theta;
    const double half = 0.5 * theta;
    const double bracket_times_sin = c * std::cos(half) / std::sin(half) * std::sin(a) + (1.0 - c) * std::cos(a);
    return bracket_times_sin * std::pow(2.0 * std::sin(half), 2.0 * c) - std::cos(theta);
}

double critical_denominator(const Order& ord, double theta) {
    const double c = ord.c();
    return c / std::tan(0.5 * theta) + (1.0 - c) / std::tan(c * kPi + (1.0 - c) * theta);
}

double critical_denominator_derivative(const Order& ord, double theta) {
    const double c = ord.c();
    const double s1 = std::sin(0.5 * theta);
    const double s2 = std::sin(c * kPi + (1.0 - c) * theta);
    return -c / (2.0 * s1 * s1) - (1.0 - c) * (1.0 - c) / (s2 * s2);
}

double critical_profile(const Order& ord, double theta) {
    return std::cos(theta) / critical_denominator(ord, theta) - std::sin(theta);
}

double critical_theta(const Order& ord) {
    require_bounded_order(ord);
    constexpr int kGrid = 400;
    constexpr double kLo = 1e-8;
    constexpr double kHi = kPi - 1e-8;

    double prev_theta = kLo;
    double prev_value = critical_equation(ord, kLo);
    int sign_changes = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    for (int i = 1; i < kGrid; ++i) {
        const double theta = kLo * std::pow(kHi / kLo, static_cast<double>(i) / (kGrid - 1));
        const double value = critical_equation(ord, theta);
        if ((prev_value > 0.0) != (value > 0.0)) {
            ++sign_changes;
            bracket_lo = prev_theta;
            bracket_hi = theta;
        }
        prev_theta = theta;
        prev_value = value;
    }
    if (sign_changes == 0) throw SolverFailure("critical equation has no sign change on (0, pi)");
    if (sign_changes > 1) throw SolverFailure("critical equation has several sign changes on (0, pi)");

    // F > 0 to the left of the root, F <= 0 to the right.
    double lo = bracket_lo;
    double hi = bracket_hi;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (critical_equation(ord, mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double im_bound(const Order& ord) {
    if (ord.alpha() < 0.5) throw DomainError("M(alpha) is defined for alpha >= 1/2");
    if (ord.is_half()) return 0.5 * kPi;
    const double theta = critical_theta(ord);
    return critical_profile(ord, theta) / (2.0 * ord.c());
}

double turning_inverse(const Order& ord, double y) {
    const double alpha = ord.alpha();
    if (!(alpha > 0.0)) throw DomainError("turning angle is constant for alpha = 0");
    if (!(y > (1.0 - alpha) * kPi + 1e-9 && y <= kPi)) {
        throw DomainError("turning angle value outside ((1 - alpha) pi, pi]");
    }
    return invert_turning(ord, y);
}

QResult q_infimum(const Order& ord, double t) {
    if (!std::isfinite(t)) throw DomainError("t must be finite");
    double reduced = std::fmod(std::abs(t), kTwoPi);
    if (reduced > kPi) reduced = kTwoPi - reduced;

    const double alpha = ord.alpha();
    if (alpha == 0.0) {
        if (reduced <= kBorderlineBand) return {ExtendedReal::finite(0.5), QCase::closed_form, std::nullopt};
        return {ExtendedReal::minus_infinity(), QCase::unbounded_below, std::nullopt};
    }

    const double edge = alpha * kPi;
    const bool at_edge = std::abs(reduced - edge) <= kBorderlineBand;

    if (alpha > 0.5 && (at_edge || reduced > edge)) {
        return {ExtendedReal::finite(std::cos(reduced) / ord.gamma()), QCase::closed_form, std::nullopt};
    }
    if (at_edge) {
        const double v = ord.is_half() ? -0.5 * kPi : std::cos(edge) / ord.gamma();
        return {ExtendedReal::finite(v), QCase::borderline, std::nullopt};
    }
    if (reduced > edge) return {ExtendedReal::minus_infinity(), QCase::unbounded_below, std::nullopt};

    const double theta0 = invert_turning(ord, kPi - reduced);
    const Complex w = boundary_point(ord, theta0).point;
    const double value = (std::polar(1.0, reduced) * w).real();
    return {ExtendedReal::finite(value), QCase::interior_critical, theta0};
}

}  // namespace korder
