#include "korder/boundary_geometry.hpp"

#include <cmath>
#include <limits>

#include "korder/error.hpp"
#include "korder/extremal_family.hpp"

namespace korder {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

// Upper half boundary, theta in (0, pi].
Complex upper_boundary(const Order& ord, double theta) {
    if (theta == kPi) {
        return {-k_alpha_from_log(ord, {std::log(2.0), 0.0}).real(), 0.0};
    }
    const Complex L = log_one_minus_unit(theta);
    return k_alpha_from_log(ord, L) * std::polar(1.0, -theta);
}

double upper_turning(const Order& ord, double theta) {
    // The boundary crosses the real axis vertically, so phi(pi) = pi exactly.
    if (ord.alpha() == 0.0 || theta == kPi) return kPi;
    const Complex z = std::polar(1.0, theta);
    const Complex L = log_one_minus_unit(theta);
    double phi = std::arg(scaled_h_prime(ord, z, L)) - theta - 0.5 * ord.beta() * (theta - kPi);
    while (phi <= -0.5 * kPi) phi += kTwoPi;
    while (phi > 1.5 * kPi) phi -= kTwoPi;
    return phi;
}

void require_angle(double theta) {
    if (!std::isfinite(theta) || theta < 0.0 || theta >= kTwoPi) {
        throw DomainError("boundary angle must lie in [0, 2 pi)");
    }
}

// Direction of b - 1 for an upper boundary point, in [0, pi].
double direction_from_center(Complex b) { return std::atan2(b.imag(), b.real() - 1.0); }

}  // namespace

const char* to_string(Membership m) noexcept {
    switch (m) {
        case Membership::inside: return "inside";
        case Membership::outside: return "outside";
        case Membership::boundary_band: return "boundary-band";
    }
    return "unknown";
}

BoundarySample boundary_point(const Order& ord, double theta) {
    require_angle(theta);
    if (theta == 0.0) {
        if (ord.alpha() <= 0.5) {
            throw SingularInputError("boundary point at theta = 0 is at infinity for alpha <= 1/2");
        }
        return {0.0, {1.0 / ord.gamma(), 0.0}, (1.0 - ord.alpha()) * kPi};
    }
    if (theta > kPi) {
        const double mirror = kTwoPi - theta;
        return {theta, std::conj(upper_boundary(ord, mirror)), kTwoPi - upper_turning(ord, mirror)};
    }
    return {theta, upper_boundary(ord, theta), upper_turning(ord, theta)};
}

Complex boundary_point_explicit(const Order& ord, double theta) {
    const double g = ord.gamma();
    if (g == 0.0) throw DomainError("explicit boundary formulas need gamma != 0");
    const double radius = std::pow(2.0 * std::sin(0.5 * theta), g);
    const double angle = -theta + 0.5 * (theta - kPi) * g;
    const double u = -(radius * std::cos(angle) - std::cos(theta)) / g;
    const double v = -(radius * std::sin(angle) + std::sin(theta)) / g;
    return {u, v};
}

double v_half(double theta) {
    return 0.5 * (kPi - theta) * std::cos(theta) + std::sin(theta) * std::log(2.0 * std::sin(0.5 * theta));
}

double u_half(double theta) {
    return 0.5 * (kPi - theta) * std::sin(theta) - std::cos(theta) * std::log(2.0 * std::sin(0.5 * theta));
}

double turning_angle(const Order& ord, double theta) {
    if (!(theta > 0.0 && theta < kTwoPi)) throw DomainError("turning angle needs theta in (0, 2 pi)");
    if (theta > kPi) return kTwoPi - upper_turning(ord, kTwoPi - theta);
    return upper_turning(ord, theta);
}

AsymptoteSpec asymptote(const Order& ord) {
    const double a = ord.alpha();
    if (!(a > 0.0 && a < 0.5)) throw DomainError("asymptotic lines exist only for 0 < alpha < 1/2");
    return {1.0 / std::tan(kPi * a), 1.0 / ord.gamma()};
}

Membership contains(const Order& ord, Complex w, double tol) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw DomainError("point must be finite");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

    const Complex rel = {w.real() - 1.0, std::abs(w.imag())};
    const double dist = std::abs(rel);
    if (dist == 0.0) return Membership::inside;
    const double target = std::atan2(rel.imag(), rel.real());

    auto classify = [tol](double signed_gap) {
        if (std::abs(signed_gap) < tol) return Membership::boundary_band;
        return signed_gap < 0.0 ? Membership::inside : Membership::outside;
    };

    const double alpha = ord.alpha();
    if (alpha == 0.0) {
        // Half-plane Re w > 1/2: boundary radius along the ray is (1/2)/(-cos).
        const double cosine = std::cos(target);
        if (cosine >= 0.0) return Membership::inside;
        return classify(dist - 0.5 / -cosine);
    }

    const double theta_lo = alpha > 0.5 ? 0.0 : kMembershipThetaFloor;
    if (alpha <= 0.5) {
        const Complex far = upper_boundary(ord, theta_lo);
        if (target <= direction_from_center(far)) {
            // Past the truncated boundary: only the unbounded end remains. Use
            // the asymptotic sector (or the strip |v| < pi/2 when alpha = 1/2).
            const double u = w.real();
            const double v = std::abs(w.imag());
            if (alpha == 0.5) return v < 0.5 * kPi ? Membership::inside : Membership::outside;
            const AsymptoteSpec line = asymptote(ord);
            return v < line.slope * (u - line.anchor) ? Membership::inside : Membership::outside;
        }
    }

    auto point_at = [&ord](double theta) {
        if (theta == 0.0) return Complex(1.0 / ord.gamma(), 0.0);
        return upper_boundary(ord, theta);
    };

    double lo = theta_lo;
    double hi = kPi;
    for (int iter = 0; iter < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (direction_from_center(point_at(mid)) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double radius = std::abs(point_at(0.5 * (lo + hi)) - 1.0);
    return classify(dist - radius);
}

std::vector<BoundarySample> sample_boundary(const Order& ord, int n, double theta_min) {
    if (n < 2) throw DomainError("boundary sampling needs n >= 2");
    if (!(theta_min >= 0.0 && theta_min < kPi)) throw DomainError("theta_min must lie in [0, pi)");
    if (theta_min == 0.0 && ord.alpha() <= 0.5) {
        throw DomainError("theta_min = 0 only allowed when the boundary is bounded (alpha > 1/2)");
    }
    std::vector<BoundarySample> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double s = static_cast<double>(i) / (n - 1);
        double theta;
        if (i == n - 1) {
            theta = kPi;
        } else if (theta_min == 0.0) {
            theta = kPi * s * s;
        } else {
            theta = theta_min * std::pow(kPi / theta_min, s);
        }
        out.push_back(boundary_point(ord, theta));
    }
    return out;
}

}  // namespace korder
