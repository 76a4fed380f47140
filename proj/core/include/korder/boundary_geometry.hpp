#pragma once

#include <vector>

#include "korder/order.hpp"

namespace korder {

/// A point u + iv = h_alpha(e^{i theta}) of the boundary of D_alpha = h_alpha(disk),
/// with the turning angle phi_alpha(theta) = theta + arg h_alpha'(e^{i theta}).
struct BoundarySample {
    double theta;
    Complex point;
    double turning;
};

/// Asymptotic line v = slope (u - anchor) of the upper boundary, 0 < alpha < 1/2.
struct AsymptoteSpec {
    double slope;   // cot(pi alpha)
    double anchor;  // 1/(2 alpha - 1)
};

enum class Membership { inside, outside, boundary_band };

const char* to_string(Membership m) noexcept;

/// Boundary point at angle theta in [0, 2 pi). theta = 0 is only accepted for
/// alpha > 1/2, where the boundary closes at 1/(2 alpha - 1); otherwise it
/// throws SingularInputError.
BoundarySample boundary_point(const Order& ord, double theta);

/// u_gamma(theta) + i v_gamma(theta) from the explicit real formulas; gamma != 0.
/// Kept separate from boundary_point so the two can be cross-checked.
Complex boundary_point_explicit(const Order& ord, double theta);

/// v_{1/2}(theta) = (pi - theta)/2 cos theta + sin theta log(2 sin(theta/2)).
double v_half(double theta);

/// u_{1/2}(theta), the real companion of v_half.
double u_half(double theta);

/// phi_alpha(theta) for theta in (0, 2 pi); maps (0, pi] onto ((1 - alpha) pi, pi]
/// increasingly. Values past pi follow from conjugate symmetry.
double turning_angle(const Order& ord, double theta);

/// Requires 0 < alpha < 1/2; DomainError otherwise.
AsymptoteSpec asymptote(const Order& ord);

/// Membership of w in D_alpha. The domain is convex around 1 = h_alpha(0), so
/// the boundary is a radial graph about 1: the boundary radius in the direction
/// of w - 1 is located by bisection on theta. Radial distances below tol give
/// boundary_band.
Membership contains(const Order& ord, Complex w, double tol);

/// n >= 2 samples with increasing theta, geometrically spaced from theta_min to pi.
/// theta_min = 0 (alpha > 1/2 only) switches to quadratic spacing from 0.
std::vector<BoundarySample> sample_boundary(const Order& ord, int n, double theta_min);

/// Smallest theta the membership search uses for unbounded domains.
inline constexpr double kMembershipThetaFloor = 1e-6;

}  // namespace korder
