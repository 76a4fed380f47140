#pragma once

#include <vector>

#include "korder/order.hpp"
#include "korder/polar_grid.hpp"

namespace korder {

/// z + a_2 z^2 + ... + a_n z^n, stored as {a_1, ..., a_n} with a_1 = 1.
class PolynomialFunction {
public:
    /// Throws DomainError if coeffs is empty or a_1 != 1.
    explicit PolynomialFunction(std::vector<Complex> coeffs);

    /// a_n for n >= 1; zero past the degree.
    Complex coefficient(int n) const;
    int degree() const noexcept { return static_cast<int>(coeffs_.size()); }

    Complex value(Complex z) const;
    Complex derivative(Complex z) const;
    Complex second_derivative(Complex z) const;

private:
    std::vector<Complex> coeffs_;
};

struct AlexanderResult {
    double sum;   // sum_{n >= 2} n^2 |a_n|
    bool convex;  // sum <= 1
};

/// Alexander's sufficient condition for convexity. The sum starts at n = 2;
/// including the n = 1 term a_1 = 1 would make the test unsatisfiable.
AlexanderResult alexander_sum(const PolynomialFunction& p);

/// Minimum of Re(1 + z p''/p') over the grid.
double convex_order_estimate(const PolynomialFunction& p, const PolarGrid& grid);

/// (gamma + 1)/(gamma + j), the j-th coefficient of q_gamma; j >= 1, Re gamma >= 0.
Complex q_gamma_coefficient(Complex gamma, int j);

/// Truncated q_gamma(z) = sum_{j=1}^{n_terms} (gamma + 1)/(gamma + j) z^j.
/// Throws DomainError for Re gamma < 0 and ConvergenceError for |z| > 0.99.
Complex q_gamma(Complex gamma, Complex z, int n_terms);

struct SeriesJet {
    Complex value;
    Complex first;
    Complex second;
};

/// q_gamma and its first two derivatives from the same truncated series.
SeriesJet q_gamma_jet(Complex gamma, Complex z, int n_terms);

/// Minimum of Re(1 + z q''/q') for q_gamma over the grid, n_terms per evaluation.
double q_gamma_convex_order(Complex gamma, const PolarGrid& grid, int n_terms);

/// H_1(z) = artanh(sqrt z)/sqrt z = sum z^n/(2n + 1); |z| < 1.
Complex H1(Complex z);

/// H_2(z) = artanh(z)/z = sum z^{2n}/(2n + 1) = H_1(z^2); |z| < 1.
Complex H2(Complex z);

/// 1/(2n + 1), the n-th Taylor coefficient of H_1.
double h1_coefficient(int n);

/// Evaluation of the odd polynomial f(z) = z + z^3/100 + z^5/50, which is
/// convex by Alexander's test, fixes +-i/sqrt 2, and yet has f'(z) = 1 only at
/// +-i sqrt(3/10). If f(z)/z were H_2(omega(z)) for a Schwarz function omega,
/// the fixed points would force f' = 1 there.
struct CounterexampleReport {
    AlexanderResult alexander;
    std::vector<Complex> fixed_points;          // nonzero solutions of f(z) = z in the disk
    std::vector<double> fixed_point_residuals;  // |f(z0) - z0|
    std::vector<Complex> unit_derivative_roots; // nonzero solutions of f'(z) = 1 in the disk
    Complex derivative_at_fixed_point;          // f'(i/sqrt 2)
    bool subordination_refuted;                 // some fixed point has f' != 1
};

PolynomialFunction counterexample_polynomial();

CounterexampleReport counterexample_check();

}  // namespace korder
