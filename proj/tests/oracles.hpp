#pragma once

// Independent reference implementations for the unit and acceptance tests.
// Nothing here calls into the library, so agreement is a real cross-check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>

namespace oracle {

using Complex = std::complex<double>;
inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Values computed once with mpmath at 30 digits and frozen here.
namespace frozen {
inline constexpr double kCriticalAt011 = 0.0050271465123204;      // F(3/5, 0.11)
inline constexpr double kCriticalAt0114 = -0.0010844180508404;    // F(3/5, 0.114)
inline constexpr double kCriticalAtPi = -0.033828519497332;       // F(3/5, pi)
inline constexpr double kProfileLowerBound = 0.32636682860136;    // G' bound on [0.11, 0.114]
inline constexpr double kFiveProfileAt0114 = 0.74348784560714;    // 5 G(0.114)
inline constexpr double kRho = 0.74349177498517;                  // 5 (2^{1/5} - 1)
inline constexpr double kThetaThreeFifths = 0.11326510040450;     // critical angle at alpha = 3/5
inline constexpr double kImBoundThreeFifths = 0.74205751392316;   // M(3/5)
inline constexpr double kInfimumQuarter = 0.14180581244561;       // convexity infimum at alpha = 1/4
inline constexpr double kInfimumHalf = 0.29434972478104;          // at alpha = 1/2
inline constexpr double kInfimumThreeQuarters = 0.45710678118655; // at alpha = 3/4
// alpha on either side of |beta - 1| = 1e-3
inline constexpr double kInfimumAt04994 = 0.29397115933068439;
inline constexpr double kInfimumAt04996 = 0.29409734127153899;
inline constexpr double kInfimumAt05004 = 0.29460213445894685;
inline constexpr double kInfimumAt05006 = 0.29472834911029630;
}  // namespace frozen

// k_alpha from the principal power: (1 - (1 - z)^gamma)/gamma, or -log(1 - z).
inline Complex k(double alpha, Complex z) {
    const double g = 2.0 * alpha - 1.0;
    if (g == 0.0) return -std::log(1.0 - z);
    return (1.0 - std::pow(1.0 - z, g)) / g;
}

inline Complex k_prime(double alpha, Complex z) { return std::pow(1.0 - z, -2.0 * (1.0 - alpha)); }

inline Complex h(double alpha, Complex z) { return k(alpha, z) / z; }

// Taylor series of h with coefficient ratio a_{n+1}/a_n = (beta + n)/(n + 2).
inline Complex h_series(double alpha, Complex z, int terms) {
    const double beta = 2.0 - 2.0 * alpha;
    Complex sum = 0.0;
    Complex power = 1.0;
    double a = 1.0;
    for (int n = 0; n < terms; ++n) {
        sum += a * power;
        a *= (beta + n) / (n + 2.0);
        power *= z;
    }
    return sum;
}

inline Complex h_series_prime(double alpha, Complex z, int terms) {
    const double beta = 2.0 - 2.0 * alpha;
    Complex sum = 0.0;
    Complex power = 1.0;
    double a = beta / 2.0;
    for (int n = 1; n < terms; ++n) {
        sum += double(n) * a * power;
        a *= (beta + n) / (n + 2.0);
        power *= z;
    }
    return sum;
}

// Central differences with step s.
inline Complex d1(const std::function<Complex(Complex)>& f, Complex z, double s = 1e-5) {
    return (f(z + s) - f(z - s)) / (2.0 * s);
}
inline Complex d2(const std::function<Complex(Complex)>& f, Complex z, double s = 1e-4) {
    return (f(z + s) - 2.0 * f(z) + f(z - s)) / (s * s);
}

// Boundary point of the image domain at angle theta by direct evaluation.
inline Complex boundary(double alpha, double theta) { return h(alpha, std::polar(1.0, theta)); }

// Scan of fn over (lo, hi) on n uniform interior points, then n more around
// the best one; returns the smallest value seen.
inline double refined_min(const std::function<double(double)>& fn, double lo, double hi, int n) {
    const double step = (hi - lo) / n;
    int best = 1;
    double best_v = fn(lo + step);
    for (int i = 2; i < n; ++i) {
        const double v = fn(lo + i * step);
        if (v < best_v) {
            best_v = v;
            best = i;
        }
    }
    const double a = lo + (best - 1) * step;
    const double fine = 2.0 * step / n;
    for (int i = 1; i < n; ++i) best_v = std::min(best_v, fn(a + i * fine));
    return best_v;
}

// max over the upper boundary arc of Im w.
inline double max_im_boundary(double alpha, int n) {
    return -refined_min([&](double th) { return -boundary(alpha, th).imag(); }, 0.0, kPi, n);
}

// inf of Re[e^{it} w] over the closure of the domain, approximated on the
// whole boundary curve. Only meaningful when the infimum is finite. For
// alpha > 1/2 the curve closes at the corner h(1), which the scan includes.
inline double q_brute_force(double alpha, double t, int n) {
    const Complex rot = std::polar(1.0, t);
    auto fn = [&](double th) { return (rot * boundary(alpha, th)).real(); };
    const double scanned = refined_min(fn, 0.0, 2.0 * kPi, n);
    return alpha > 0.5 ? std::min(scanned, fn(0.0)) : scanned;
}

}  // namespace oracle
