#include "korder/extremal_family.hpp"

#include <array>
#include <cmath>
#include <string>

#include "korder/error.hpp"

namespace korder {

namespace {

// Below this modulus h, h' and the convexity transform switch to Taylor series.
constexpr double kSeriesRadius = 1e-3;
constexpr int kSeriesTerms = 20;

// |beta - 1| below which the infimum formula is replaced by its expansion.
constexpr double kInfimumSeriesBand = 1e-3;

void require_closed_disk(Complex z) {
    if (!(std::abs(z) <= 1.0 + 1e-12)) {
        throw DomainError("point outside the closed unit disk");
    }
}

bool is_one(Complex z) { return z == Complex(1.0, 0.0); }

// Taylor coefficient of h_alpha: a_n = (beta)_n / (n! (n + 1)).
// Fills value, first and second derivative sums at z.
struct SeriesSums {
    Complex h, dh, d2h;
};

SeriesSums small_z_series(double beta, Complex z) {
    std::array<Complex, kSeriesTerms> power{};
    power[0] = 1.0;
    for (int n = 1; n < kSeriesTerms; ++n) power[n] = power[n - 1] * z;

    SeriesSums s{};
    double pochhammer_over_factorial = 1.0;  // (beta)_n / n!
    for (int n = 0; n < kSeriesTerms; ++n) {
        if (n > 0) pochhammer_over_factorial *= (beta + n - 1) / n;
        const double a = pochhammer_over_factorial / (n + 1);
        s.h += a * power[n];
        if (n >= 1) s.dh += double(n) * a * power[n - 1];
        if (n >= 2) s.d2h += double(n * (n - 1)) * a * power[n - 2];
    }
    return s;
}

Complex complex_expm1(Complex x) {
    const double a = x.real();
    const double b = x.imag();
    const double half_sin = std::sin(0.5 * b);
    return {std::expm1(a) * std::cos(b) - 2.0 * half_sin * half_sin, std::exp(a) * std::sin(b)};
}

}  // namespace

Complex expm1_ratio(Complex x) {
    if (std::abs(x) < 1e-4) {
        return 1.0 + x * (1.0 / 2.0 + x * (1.0 / 6.0 + x * (1.0 / 24.0 + x / 120.0)));
    }
    return complex_expm1(x) / x;
}

Complex log_one_minus(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    double re;
    if (std::abs(z) < 0.5) {
        re = 0.5 * std::log1p(x * (x - 2.0) + y * y);
    } else {
        re = std::log(std::hypot(1.0 - x, y));
    }
    return {re, std::atan2(-y, 1.0 - x)};
}

Complex log_one_minus_unit(double theta) {
    return {std::log(2.0 * std::sin(0.5 * theta)), 0.5 * (theta - kPi)};
}

Complex k_alpha_from_log(const Order& ord, Complex L) {
    // k = ((1 - z)^gamma - 1) / (-gamma) = -L E(gamma L)
    return -L * expm1_ratio(ord.gamma() * L);
}

Complex scaled_h_prime(const Order& ord, Complex z, Complex L) {
    return z + (1.0 - z) * L * expm1_ratio(-ord.gamma() * L);
}

Complex k_alpha(const Order& ord, Complex z) {
    require_closed_disk(z);
    if (is_one(z)) {
        if (ord.alpha() > 0.5) return 1.0 / ord.gamma();
        throw SingularInputError("k_alpha is unbounded at z = 1 for alpha <= 1/2");
    }
    if (z == Complex(0.0, 0.0)) return 0.0;
    return k_alpha_from_log(ord, log_one_minus(z));
}

Complex k_alpha_prime(const Order& ord, Complex z) {
    require_closed_disk(z);
    if (is_one(z)) throw SingularInputError("k_alpha' is unbounded at z = 1");
    return std::exp(-ord.beta() * log_one_minus(z));
}

Complex h_alpha(const Order& ord, Complex z) {
    require_closed_disk(z);
    if (z == Complex(0.0, 0.0)) return 1.0;
    if (is_one(z)) {
        if (ord.alpha() > 0.5) return 1.0 / ord.gamma();
        throw SingularInputError("h_alpha is unbounded at z = 1 for alpha <= 1/2");
    }
    if (std::abs(z) < kSeriesRadius) return small_z_series(ord.beta(), z).h;
    return k_alpha_from_log(ord, log_one_minus(z)) / z;
}

Complex h_alpha_prime(const Order& ord, Complex z) {
    require_closed_disk(z);
    if (is_one(z)) throw SingularInputError("h_alpha' is unbounded at z = 1");
    if (std::abs(z) < kSeriesRadius) return small_z_series(ord.beta(), z).dh;
    const Complex L = log_one_minus(z);
    return scaled_h_prime(ord, z, L) * std::exp(-ord.beta() * L) / (z * z);
}

Complex h_alpha_series(const Order& ord, Complex z, int n_terms) {
    if (n_terms < 1) throw DomainError("series needs at least one term");
    if (std::abs(z) > 0.95 + 1e-12) {
        throw ConvergenceError("series cross-check restricted to |z| <= 0.95");
    }
    const double beta = ord.beta();
    double coef = 1.0;  // (beta)_n / n!
    Complex zn = 1.0;
    Complex sum = 0.0;
    for (int n = 0; n < n_terms; ++n) {
        if (n > 0) {
            coef *= (beta + n - 1) / n;
            zn *= z;
        }
        sum += (coef / (n + 1)) * zn;
    }
    return sum;
}

double b_sequence(const Order& ord, long n) {
    if (n < 0) throw DomainError("b_n needs n >= 0");
    const double beta = ord.beta();
    double b = 1.0;
    for (long k = 1; k <= n; ++k) {
        b *= (k + 1 - beta) / (k + 2);
    }
    return b;
}

Complex omega_partial(const Order& ord, Complex z, int n_terms) {
    require_closed_disk(z);
    const double beta = ord.beta();
    double prev = 1.0;
    Complex zn = 1.0;
    Complex sum = 0.0;
    for (int n = 1; n <= n_terms; ++n) {
        const double b = prev * (n + 1 - beta) / (n + 2);
        zn *= z;
        sum += (b - prev) * zn;
        prev = b;
    }
    return sum;
}

Complex convexity_transform(const Order& ord, Complex z) {
    require_closed_disk(z);
    if (is_one(z)) throw SingularInputError("convexity transform is unbounded at z = 1");
    if (std::abs(z) < kSeriesRadius) {
        const SeriesSums s = small_z_series(ord.beta(), z);
        return 1.0 + z * s.d2h / s.dh;
    }
    const Complex L = log_one_minus(z);
    return ord.beta() * z * z / ((1.0 - z) * scaled_h_prime(ord, z, L)) - 1.0;
}

ConvexityInfimum convexity_infimum(const Order& ord) {
    const double alpha = ord.alpha();
    if (alpha <= 0.0) {
        throw DomainError("infimum formula needs alpha > 0; h_0 maps onto a half-plane");
    }
    const double beta = ord.beta();
    const double eps = beta - 1.0;
    double value;
    if (std::abs(eps) < kInfimumSeriesBand) {
        // Numerator and denominator expanded in eps = beta - 1 and divided by eps.
        const double l = std::log(2.0);
        const double l2 = l * l;
        const double l3 = l2 * l;
        const double l4 = l3 * l;
        const double num = (4 * l - 3) + eps * ((2 * l2 - 1) + eps * ((2 * l3 / 3) + eps * (l4 / 6)));
        const double den = 2 * ((1 - 2 * l) - eps * (l2 + eps * (l3 / 3 + eps * (l4 / 12))));
        value = num / den;
    } else {
        const double p = std::exp2(beta);
        value = (2 * p - 2 - beta - beta * beta) / (2 * (1 + beta - p));
    }
    const double bound = alpha >= 0.5 ? (4 * alpha - 1) / 5 : alpha / (3 - alpha);
    return {value, bound};
}

}  // namespace korder
