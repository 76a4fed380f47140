#include "korder/verify_harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "korder/boundary_geometry.hpp"
#include "korder/classical_criteria.hpp"
#include "korder/error.hpp"
#include "korder/extremal_family.hpp"
#include "korder/extremal_solver.hpp"
#include "korder/property_sweeps.hpp"
#include "parallel.hpp"

namespace korder {

namespace {

constexpr double kTheta0 = 0.11;
constexpr double kTheta1 = 0.114;
constexpr double kInf = std::numeric_limits<double>::infinity();

Check finish(std::string name, std::vector<Quantity> quantities, double tolerance, std::string verdict = {},
             std::string expected_verdict = {}) {
    bool pass = verdict == expected_verdict;
    for (const Quantity& q : quantities) pass = pass && q.expected.contains(q.measured);
    return {std::move(name), std::move(quantities), std::move(verdict), std::move(expected_verdict), tolerance, pass};
}

std::vector<double> sweep_alphas() {
    std::vector<double> out;
    for (int i = 1; i <= 9; ++i) out.push_back(i / 10.0);
    return out;
}

// Max of v over (0, pi) from the explicit real boundary formulas: a uniform
// pass, then a second uniform pass around the best sample.
double brute_force_max_im(const Order& ord, int samples) {
    auto v = [&](double theta) { return boundary_point_explicit(ord, theta).imag(); };
    const double step = kPi / samples;
    int best = 1;
    double best_v = v(step);
    for (int i = 2; i < samples; ++i) {
        const double value = v(i * step);
        if (value > best_v) {
            best_v = value;
            best = i;
        }
    }
    const double lo = (best - 1) * step;
    const double fine = 2.0 * step / samples;
    for (int i = 1; i < samples; ++i) best_v = std::max(best_v, v(lo + i * fine));
    return best_v;
}

Check rho_value() {
    const double rho = -k_alpha(Order(0.6), -1.0).real();
    const double closed = 5.0 * (std::pow(2.0, 0.2) - 1.0);
    return finish("rho_value",
                  {{"-k_{3/5}(-1)", rho, Interval::half_open(0.743491, 0.743492)},
                   {"-k_{3/5}(-1) - 5(2^{1/5} - 1)", rho - closed, Interval::around(0.0, 1e-14)}},
                  0.0);
}

Check f_signs() {
    const Order ord(0.6);
    return finish("F_signs",
                  {{"F(0.11)", critical_equation(ord, kTheta0), Interval::half_open(0.0050, 0.0051)},
                   {"F(0.114)", critical_equation(ord, kTheta1), Interval{-0.0011, -0.0010, false, true}},
                   {"theta_{3/5}", critical_theta(ord), Interval::open(kTheta0, kTheta1)}},
                  0.0);
}

Check g_monotone() {
    const Order ord(0.6);
    const double bound = -std::sin(kTheta1) / critical_denominator(ord, kTheta1) -
                         critical_denominator_derivative(ord, kTheta1) * std::cos(kTheta1) /
                             std::pow(critical_denominator(ord, kTheta0), 2) -
                         std::cos(kTheta0);
    return finish("G_monotone", {{"lower bound of G' on [0.11, 0.114]", bound, Interval::half_open(0.326, 0.327)}},
                  0.0);
}

Check m35_bound() {
    const Order ord(0.6);
    const double five_g = 5.0 * critical_profile(ord, kTheta1);
    const double m = im_bound(ord);
    const double rho = 5.0 * (std::pow(2.0, 0.2) - 1.0);
    const double brute = brute_force_max_im(ord, 10000);
    return finish("M_35_bound",
                  {{"5G(0.114)", five_g, Interval::half_open(0.743487, 0.743488)},
                   {"M(3/5) < 5G(0.114)", m, Interval::below(five_g)},
                   {"M(3/5) < rho", m, Interval::below(rho)},
                   {"M(3/5) - brute-force max of v", m - brute, Interval::around(0.0, 1e-8)}},
                  1e-8);
}

Check h_monotone() {
    const Order ord(0.6);
    const double right = 4.0 * kPi / 9.0;
    constexpr int kSamples = 2000;
    double max_slope = -kInf;
    double min_h = kInf;
    for (int i = 1; i < kSamples; ++i) {
        const double theta = right * i / kSamples;
        max_slope = std::max(max_slope, critical_denominator_derivative(ord, theta));
        min_h = std::min(min_h, critical_denominator(ord, theta));
    }
    return finish("H_monotone",
                  {{"max H' on (0, 4pi/9)", max_slope, Interval::below(0.0)},
                   {"min H on (0, 4pi/9)", min_h, Interval::above(0.0)}},
                  0.0);
}

Check m_half() {
    constexpr int kSamples = 10000;
    double sup = -kInf;
    for (int i = 0; i < kSamples; ++i) {
        const double theta = 1e-12 * std::pow(kPi / 1e-12, static_cast<double>(i) / kSamples);
        sup = std::max(sup, v_half(theta));
    }
    return finish("M_half", {{"sup v_{1/2}", sup, Interval::closed(0.5 * kPi - 1e-4, 0.5 * kPi + 1e-12)}}, 1e-4);
}

Check kustner_consistency() {
    std::vector<Quantity> quantities;
    for (double alpha : {0.25, 0.5, 0.75}) {
        const Order ord(alpha);
        double numeric_min = kInf;
        for (int k = 0; k <= 99; ++k) {
            const double r = 0.99 + (0.9999 - 0.99) * k / 99.0;
            for (int j = -100; j <= 100; ++j) {
                const double angle = kPi + 0.05 * j / 100.0;
                numeric_min = std::min(numeric_min, convexity_transform(ord, std::polar(r, angle)).real());
            }
        }
        const double closed = convexity_infimum(ord).value;
        quantities.push_back({"alpha=" + std::to_string(alpha).substr(0, 4) + " numeric min - closed form",
                              numeric_min - closed, Interval::around(0.0, 1e-5)});
    }
    return finish("kustner_consistency", std::move(quantities), 1e-5);
}

Check subordination_check(const VerifyOptions& opt) {
    std::size_t violations = 0;
    for (double alpha : sweep_alphas()) {
        violations += subordination_sweep(Order(alpha), opt.seed, opt.trials).violation_count();
    }
    return finish("subordination_sweep",
                  {{"membership violations", static_cast<double>(violations), Interval::closed(0.0, 0.0)}}, 1e-6);
}

Check growth_check(const VerifyOptions& opt) {
    std::size_t violations = 0;
    for (double alpha : sweep_alphas()) {
        violations += growth_sweep(Order(alpha), opt.seed, opt.trials).violation_count();
    }
    return finish("growth_sweep",
                  {{"growth bound violations", static_cast<double>(violations), Interval::closed(0.0, 0.0)}}, 1e-9);
}

Check starlike_check(const VerifyOptions& opt) {
    const StarlikeReport report = starlike_average_sweep(Order(0.6), opt.seed, std::max(1, opt.trials / 2));
    return finish("starlike_avg", {{"min Re[z h'/h]", report.minimum(), Interval{-1e-9, kInf, true, false}}},
                  1e-9);
}

Check counterexample() {
    const CounterexampleReport r = counterexample_check();
    double residual = 0.0;
    for (double x : r.fixed_point_residuals) residual = std::max(residual, x);
    const double expected_root = std::sqrt(0.3);
    double root_error = r.unit_derivative_roots.size() == 2 ? 0.0 : 1.0;
    if (r.unit_derivative_roots.size() == 2) {
        root_error = std::max(std::abs(r.unit_derivative_roots[0] - Complex(0.0, expected_root)),
                              std::abs(r.unit_derivative_roots[1] - Complex(0.0, -expected_root)));
    }
    return finish("counterexample",
                  {{"Alexander sum", r.alexander.sum, Interval::around(0.59, 1e-15)},
                   {"fixed points found", static_cast<double>(r.fixed_points.size()), Interval::closed(2.0, 2.0)},
                   {"max |f(z0) - z0|", residual, Interval::closed(0.0, 1e-15)},
                   {"f'=1 root error vs +-i sqrt(3/10)", root_error, Interval::closed(0.0, 1e-12)},
                   {"Re f'(i/sqrt 2)", r.derivative_at_fixed_point.real(), Interval::around(1.01, 1e-14)},
                   {"Im f'(i/sqrt 2)", r.derivative_at_fixed_point.imag(), Interval::around(0.0, 1e-14)}},
                  1e-15, r.subordination_refuted ? "not subordinate" : "undecided", "not subordinate");
}

}  // namespace

bool Interval::contains(double x) const {
    if (std::isnan(x)) return false;
    const bool above_lo = lo_closed ? x >= lo : x > lo;
    const bool below_hi = hi_closed ? x <= hi : x < hi;
    return above_lo && below_hi;
}

VerificationReport verify_all(const VerifyOptions& options) {
    const std::vector<std::function<Check()>> jobs = {
        rho_value,
        f_signs,
        g_monotone,
        m35_bound,
        h_monotone,
        m_half,
        kustner_consistency,
        [&] { return subordination_check(options); },
        [&] { return growth_check(options); },
        [&] { return starlike_check(options); },
        counterexample,
    };
    VerificationReport report{std::vector<Check>(jobs.size()), true};
    detail::parallel_for(static_cast<int>(jobs.size()), [&](int i) {
        const std::size_t slot = static_cast<std::size_t>(i);
        try {
            report.checks[slot] = jobs[slot]();
        } catch (const Error& e) {
            report.checks[slot] = {"check #" + std::to_string(i), {}, std::string("error: ") + e.what(), "", 0.0, false};
        }
    });
    std::sort(report.checks.begin(), report.checks.end(),
              [](const Check& a, const Check& b) { return a.name < b.name; });
    for (const Check& c : report.checks) report.overall = report.overall && c.pass;
    return report;
}

std::vector<std::string> required_check_names() {
    std::vector<std::string> names = {"rho_value",          "F_signs",      "G_monotone",         "M_35_bound",
                                      "H_monotone",         "M_half",       "kustner_consistency", "subordination_sweep",
                                      "growth_sweep",       "starlike_avg", "counterexample"};
    std::sort(names.begin(), names.end());
    return names;
}

}  // namespace korder
