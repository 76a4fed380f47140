#pragma once

#include "korder/order.hpp"

namespace korder {

// The extremal function k_alpha of K(alpha), characterized by
//   1 + z k''/k' = (1 + (1 - 2 alpha) z) / (1 - z),  k(0) = 0, k'(0) = 1,
// and its quotient h_alpha(z) = k_alpha(z)/z = 2F1(beta, 1; 2; z).
//
// All powers and logarithms of (1 - z) use the principal branch, which is
// analytic on the closed disk minus z = 1. Inputs with |z| > 1 are rejected.

/// k_alpha(z). At z = 1 returns 1/(2 alpha - 1) when alpha > 1/2 and throws
/// SingularInputError otherwise.
Complex k_alpha(const Order& ord, Complex z);

/// k_alpha'(z) = (1 - z)^-beta. Throws SingularInputError at z = 1.
Complex k_alpha_prime(const Order& ord, Complex z);

/// h_alpha(z) = k_alpha(z)/z with h_alpha(0) = 1 exactly.
Complex h_alpha(const Order& ord, Complex z);

/// h_alpha'(z); h_alpha'(0) = beta/2. Throws SingularInputError at z = 1.
Complex h_alpha_prime(const Order& ord, Complex z);

/// Partial sum of sum_n (beta)_n / (n + 1) z^n / n! with n_terms terms.
/// Independent of the closed form; throws ConvergenceError for |z| > 0.95.
Complex h_alpha_series(const Order& ord, Complex z, int n_terms);

/// b_n = (2 - beta)_n / (3)_n by the recurrence b_n = b_{n-1} (n + 1 - beta)/(n + 2).
double b_sequence(const Order& ord, long n);

/// Partial sum of omega(z) = sum_{n>=1} (b_n - b_{n-1}) z^n.
Complex omega_partial(const Order& ord, Complex z, int n_terms);

/// 1 + z h_alpha''(z) / h_alpha'(z). Equals (1 - omega)/(1 + omega).
Complex convexity_transform(const Order& ord, Complex z);

struct ConvexityInfimum {
    double value;        // inf over the disk of Re(1 + z h''/h'), attained at z = -1
    double lower_bound;  // (4 alpha - 1)/5 for alpha >= 1/2, alpha/(3 - alpha) below
};

/// Closed-form infimum of Re(1 + z h_alpha''/h_alpha') over the disk.
/// Requires 0 < alpha < 1; alpha = 0 (a half-plane) throws DomainError.
ConvexityInfimum convexity_infimum(const Order& ord);

// Kernels shared with the boundary code. They take L = log(1 - z) explicitly
// so callers on the unit circle can supply it in closed form.

/// log(1 - z), accurate for small |z| and for z close to 1.
Complex log_one_minus(Complex z);

/// log(1 - e^{i theta}) = log(2 sin(theta/2)) + i (theta - pi)/2 for theta in (0, 2 pi).
Complex log_one_minus_unit(double theta);

/// expm1(x)/x for complex x, continuous through x = 0.
Complex expm1_ratio(Complex x);

/// k_alpha(z) given L = log(1 - z).
Complex k_alpha_from_log(const Order& ord, Complex L);

/// z^2 h_alpha'(z) (1 - z)^beta = z + (1 - z) L E(-gamma L), E = expm1_ratio.
/// Bounded near z = 1, so its argument stays well-conditioned there.
Complex scaled_h_prime(const Order& ord, Complex z, Complex L);

}  // namespace korder
