#include "korder/classical_criteria.hpp"

#include <algorithm>
#include <cmath>

#include "korder/error.hpp"

namespace korder {

namespace {

constexpr double kSeriesRadius = 1e-3;
constexpr int kSeriesTerms = 20;

// Roots of a u^2 + b u + c = 0 without cancellation; a != 0.
std::pair<Complex, Complex> solve_quadratic(Complex a, Complex b, Complex c) {
    const Complex root = std::sqrt(b * b - 4.0 * a * c);
    const Complex q = -0.5 * ((b * std::conj(root)).real() >= 0.0 ? b + root : b - root);
    if (q == Complex(0.0, 0.0)) return {0.0, 0.0};
    return {q / a, c / q};
}

// Nonzero z in the disk with z^2 among the roots of a u^2 + b u = 0, +i side first.
std::vector<Complex> nonzero_disk_roots(Complex a, Complex b) {
    const auto [u1, u2] = solve_quadratic(a, b, 0.0);
    std::vector<Complex> out;
    for (Complex u : {u1, u2}) {
        if (u == Complex(0.0, 0.0)) continue;
        const Complex s = std::sqrt(u);
        for (Complex z : {s, -s}) {
            if (std::abs(z) < 1.0) out.push_back(z);
        }
    }
    std::sort(out.begin(), out.end(), [](Complex x, Complex y) { return x.imag() > y.imag(); });
    return out;
}

void require_gamma(Complex gamma) {
    if (gamma.real() < 0.0) throw DomainError("q_gamma needs Re gamma >= 0");
}

}  // namespace

PolynomialFunction::PolynomialFunction(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty() || coeffs_.front() != Complex(1.0, 0.0)) {
        throw DomainError("normalized polynomial needs a_1 = 1");
    }
}

Complex PolynomialFunction::coefficient(int n) const {
    if (n < 1) throw DomainError("coefficients are indexed from 1");
    return n <= degree() ? coeffs_[static_cast<std::size_t>(n - 1)] : Complex(0.0, 0.0);
}

Complex PolynomialFunction::value(Complex z) const {
    Complex acc = 0.0;
    for (int n = degree(); n >= 1; --n) acc = acc * z + coeffs_[static_cast<std::size_t>(n - 1)];
    return acc * z;
}

Complex PolynomialFunction::derivative(Complex z) const {
    Complex acc = 0.0;
    for (int n = degree(); n >= 1; --n) acc = acc * z + double(n) * coeffs_[static_cast<std::size_t>(n - 1)];
    return acc;
}

Complex PolynomialFunction::second_derivative(Complex z) const {
    Complex acc = 0.0;
    for (int n = degree(); n >= 2; --n) {
        acc = acc * z + double(n * (n - 1)) * coeffs_[static_cast<std::size_t>(n - 1)];
    }
    return acc;
}

AlexanderResult alexander_sum(const PolynomialFunction& p) {
    double sum = 0.0;
    for (int n = 2; n <= p.degree(); ++n) sum += double(n) * double(n) * std::abs(p.coefficient(n));
    return {sum, sum <= 1.0};
}

double convex_order_estimate(const PolynomialFunction& p, const PolarGrid& grid) {
    return grid_minimum(grid, [&](Complex z) { return (1.0 + z * p.second_derivative(z) / p.derivative(z)).real(); });
}

Complex q_gamma_coefficient(Complex gamma, int j) {
    require_gamma(gamma);
    if (j < 1) throw DomainError("q_gamma coefficients start at j = 1");
    return (gamma + 1.0) / (gamma + double(j));
}

SeriesJet q_gamma_jet(Complex gamma, Complex z, int n_terms) {
    require_gamma(gamma);
    if (n_terms < 1) throw DomainError("series needs at least one term");
    if (std::abs(z) > 0.99 + 1e-12) throw ConvergenceError("q_gamma series restricted to |z| <= 0.99");
    SeriesJet jet{0.0, 0.0, 0.0};
    Complex z_jm2 = 0.0;  // z^{j-2}
    Complex z_jm1 = 1.0;  // z^{j-1}
    for (int j = 1; j <= n_terms; ++j) {
        const Complex c = (gamma + 1.0) / (gamma + double(j));
        jet.value += c * z_jm1 * z;
        jet.first += double(j) * c * z_jm1;
        if (j >= 2) jet.second += double(j) * double(j - 1) * c * z_jm2;
        z_jm2 = z_jm1;
        z_jm1 *= z;
    }
    return jet;
}

Complex q_gamma(Complex gamma, Complex z, int n_terms) { return q_gamma_jet(gamma, z, n_terms).value; }

double q_gamma_convex_order(Complex gamma, const PolarGrid& grid, int n_terms) {
    return grid_minimum(grid, [&](Complex z) {
        const SeriesJet jet = q_gamma_jet(gamma, z, n_terms);
        return (1.0 + z * jet.second / jet.first).real();
    });
}

double h1_coefficient(int n) {
    if (n < 0) throw DomainError("coefficient index must be >= 0");
    return 1.0 / (2.0 * n + 1.0);
}

Complex H1(Complex z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("H1 is evaluated on the open disk");
    if (std::abs(z) < kSeriesRadius) {
        Complex acc = 0.0;
        for (int n = kSeriesTerms - 1; n >= 0; --n) acc = acc * z + h1_coefficient(n);
        return acc;
    }
    const Complex s = std::sqrt(z);
    return std::atanh(s) / s;
}

Complex H2(Complex z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("H2 is evaluated on the open disk");
    if (std::abs(z) < kSeriesRadius) return H1(z * z);
    return std::atanh(z) / z;
}

PolynomialFunction counterexample_polynomial() {
    return PolynomialFunction({1.0, 0.0, 1.0 / 100.0, 0.0, 1.0 / 50.0});
}

CounterexampleReport counterexample_check() {
    const PolynomialFunction f = counterexample_polynomial();
    const Complex a3 = f.coefficient(3);
    const Complex a5 = f.coefficient(5);

    CounterexampleReport report{};
    report.alexander = alexander_sum(f);

    // f(z) = z  <=>  z^3 (a3 + a5 z^2) = 0
    report.fixed_points = nonzero_disk_roots(a5, a3);
    for (Complex z0 : report.fixed_points) report.fixed_point_residuals.push_back(std::abs(f.value(z0) - z0));

    // f'(z) = 1  <=>  z^2 (3 a3 + 5 a5 z^2) = 0
    report.unit_derivative_roots = nonzero_disk_roots(5.0 * a5, 3.0 * a3);

    report.derivative_at_fixed_point = f.derivative(Complex(0.0, 1.0 / std::sqrt(2.0)));

    report.subordination_refuted = std::any_of(report.fixed_points.begin(), report.fixed_points.end(),
                                               [&](Complex z0) { return std::abs(f.derivative(z0) - 1.0) > 1e-12; });
    return report;
}

}  // namespace korder
