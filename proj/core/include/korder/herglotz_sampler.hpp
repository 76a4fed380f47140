#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "korder/order.hpp"
#include "korder/polar_grid.hpp"

namespace korder {

struct Atom {
    double angle;   // t_j in [0, 2 pi)
    double weight;  // lambda_j > 0
};

/// Finite probability measure on the circle. A member f of K(alpha) is
/// generated from it through
///   f'(z) = prod_j (1 - z e^{-i t_j})^{-2 (1 - alpha) lambda_j},
/// which gives 1 + z f''/f' = sum_j lambda_j (1 + (1 - 2 alpha) z e^{-i t_j}) / (1 - z e^{-i t_j}),
/// a convex combination of half-plane maps onto Re w > alpha.
class AtomicMeasure {
public:
    /// Validates: non-empty, positive weights summing to 1 (1e-12), angles in
    /// [0, 2 pi) pairwise distinct, and closure under t -> t + pi with equal
    /// weights when odd_symmetric is set. Throws DomainError.
    AtomicMeasure(std::vector<Atom> atoms, bool odd_symmetric = false);

    /// The unit point mass at angle 0; it generates k_alpha itself.
    static AtomicMeasure point_mass();

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    bool odd_symmetric() const noexcept { return odd_; }

private:
    std::vector<Atom> atoms_;
    bool odd_;
};

class GeneratedFunction {
public:
    GeneratedFunction(Order ord, AtomicMeasure measure);

    const Order& order() const noexcept { return ord_; }
    const AtomicMeasure& measure() const noexcept { return measure_; }

    /// f'(z), principal branches; |z| < 1.
    Complex derivative(Complex z) const;
    /// f''(z)/f'(z).
    Complex log_derivative(Complex z) const;
    /// 1 + z f''(z)/f'(z).
    Complex convexity(Complex z) const;
    /// f(z) by 64-node Gauss-Legendre along [0, z], sub-segments of length <= 0.1.
    Complex value(Complex z) const;
    /// f(r e^{i angle}) for ascending radii, integrating cumulatively along the ray.
    std::vector<Complex> values_on_ray(double angle, std::span<const double> radii) const;

private:
    Complex integrate_segment(Complex from, Complex to) const;

    Order ord_;
    AtomicMeasure measure_;
    std::vector<Complex> rotations_;  // e^{-i t_j}
    std::vector<double> exponents_;   // 2 (1 - alpha) lambda_j
};

/// f'(z) of a generated function.
inline Complex f_prime(const GeneratedFunction& gf, Complex z) { return gf.derivative(z); }
/// f(z) of a generated function; f(0) = 0 exactly.
inline Complex f_value(const GeneratedFunction& gf, Complex z) { return gf.value(z); }

/// m atoms (2m when odd) with angles uniform on [0, 2 pi) and weights from
/// normalized exponentials, i.e. flat Dirichlet weights. Deterministic in seed.
/// The sampling scheme is a testing convenience, not a natural measure on K(alpha).
AtomicMeasure random_measure(std::uint64_t seed, int m, bool odd);

/// Minimum of Re(1 + z f''/f') over the grid.
double convex_order_estimate(const GeneratedFunction& gf, const PolarGrid& grid);

/// Minimum over the grid of Re[z h'(z)/h(z)] for h = sum_i weights_i fs_i.
/// Throws EvaluationError if h vanishes at a grid point.
double min_re_star(std::span<const GeneratedFunction> fs, std::span<const double> weights, const PolarGrid& grid);

struct CoveringVerdict {
    bool pass;
    double min_ratio;       // min over samples of |f(r e^{it})| / (rho r)
    double witness_angle;   // where min_ratio is attained
    double witness_radius;
};

/// Checks |f(r e^{it})| >= rho r (1 - tol) for r in {0.9, 0.99, 0.999} on n_angles angles.
CoveringVerdict covering_radius_check(const GeneratedFunction& gf, double rho, int n_angles, double tol = 1e-9);

struct ImRatioVerdict {
    bool pass;
    double max_abs_im;  // max over the grid of |Im f(z)/z|
    Complex witness;
};

/// Checks max over the grid of |Im f(z)/z| <= bound.
ImRatioVerdict im_ratio_bound_check(const GeneratedFunction& gf, double bound, const PolarGrid& grid);

/// f(z) at every grid point, indexed [k * n_angles + j] for radius k and angle j.
std::vector<Complex> values_on_grid(const GeneratedFunction& gf, const PolarGrid& grid);

}  // namespace korder
