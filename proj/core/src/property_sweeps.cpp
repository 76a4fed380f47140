#include "korder/property_sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "korder/boundary_geometry.hpp"
#include "korder/extremal_family.hpp"
#include "korder/random.hpp"
#include "parallel.hpp"

namespace korder {

namespace {

constexpr std::uint64_t kAtomCountStream = 0xa7c0u;
constexpr std::uint64_t kPointStream = 0x9017u;

template <class TrialFn>
SweepReport run_sweep(std::string name, const Order& ord, std::uint64_t seed, int trials, bool odd, TrialFn check) {
    std::vector<std::optional<TrialRecord>> slots(static_cast<std::size_t>(std::max(trials, 0)));
    detail::parallel_for(trials, [&](int i) {
        const std::uint64_t s = trial_seed(seed, static_cast<std::uint64_t>(i));
        const GeneratedFunction gf = trial_function(ord, s, odd);
        TrialRecord record{i, s, gf.measure(), {}};
        check(gf, s, record.violations);
        slots[static_cast<std::size_t>(i)] = std::move(record);
    });
    SweepReport report{std::move(name), ord.alpha(), seed, {}};
    for (auto& slot : slots) report.records.push_back(std::move(*slot));
    return report;
}

}  // namespace

std::size_t SweepReport::violation_count() const {
    std::size_t n = 0;
    for (const TrialRecord& r : records) n += r.violations.size();
    return n;
}

GeneratedFunction trial_function(const Order& ord, std::uint64_t trial_seed_value, bool odd) {
    CounterRng rng(trial_seed_value ^ kAtomCountStream);
    const int m = 1 + static_cast<int>(rng.below(4));
    return GeneratedFunction(ord, random_measure(trial_seed_value, m, odd));
}

SweepReport subordination_sweep(const Order& ord, std::uint64_t seed, int trials, int points_per_trial, double tol) {
    return run_sweep("subordination", ord, seed, trials, false,
                     [&](const GeneratedFunction& gf, std::uint64_t s, std::vector<Violation>& out) {
                         CounterRng rng(s ^ kPointStream);
                         for (int p = 0; p < points_per_trial; ++p) {
                             const double r = 0.99 * std::sqrt(rng.uniform());
                             const double t = 2.0 * kPi * rng.uniform();
                             const Complex z = std::polar(r, t);
                             if (z == Complex(0.0, 0.0)) continue;
                             const Complex w = gf.value(z) / z;
                             if (contains(ord, w, tol) == Membership::outside) {
                                 out.push_back({"f(z)/z in h_alpha(D)", z, std::abs(w - 1.0), tol});
                             }
                         }
                     });
}

SweepReport growth_sweep(const Order& ord, std::uint64_t seed, int trials, int n_angles) {
    constexpr double kRadii[] = {0.5, 0.9, 0.99};
    constexpr double kSlack = 1e-9;
    return run_sweep("growth", ord, seed, trials, false,
                     [&](const GeneratedFunction& gf, std::uint64_t, std::vector<Violation>& out) {
                         for (int j = 0; j < n_angles; ++j) {
                             const double angle = 2.0 * kPi * j / n_angles;
                             const std::vector<Complex> ray = gf.values_on_ray(angle, kRadii);
                             for (std::size_t k = 0; k < ray.size(); ++k) {
                                 const double r = kRadii[k];
                                 const Complex z = std::polar(r, angle);
                                 const double re = (ray[k] / z).real();
                                 const double lo = h_alpha(ord, -r).real();
                                 const double hi = h_alpha(ord, r).real();
                                 if (re < lo - kSlack) out.push_back({"Re f(z)/z >= h(-r)", z, re, lo});
                                 if (re > hi + kSlack) out.push_back({"Re f(z)/z <= h(r)", z, re, hi});
                                 const double mod = std::abs(ray[k]);
                                 const double mod_lo = -k_alpha(ord, -r).real();
                                 const double mod_hi = k_alpha(ord, r).real();
                                 if (mod < mod_lo - kSlack) out.push_back({"|f(z)| >= -k(-r)", z, mod, mod_lo});
                                 if (mod > mod_hi + kSlack) out.push_back({"|f(z)| <= k(r)", z, mod, mod_hi});
                             }
                         }
                     });
}

SweepReport odd_sweep(const Order& ord, std::uint64_t seed, int trials, const PolarGrid& grid) {
    return run_sweep("odd", ord, seed, trials, true,
                     [&](const GeneratedFunction& gf, std::uint64_t, std::vector<Violation>& out) {
                         const std::vector<Complex> values = values_on_grid(gf, grid);
                         for (int k = 0; k < grid.n_radii; ++k) {
                             for (int j = 0; j < grid.n_angles; ++j) {
                                 const Complex z = grid.point(k, j);
                                 const Complex fz = values[static_cast<std::size_t>(k * grid.n_angles + j)];
                                 if (j < grid.n_angles / 2 && grid.n_angles % 2 == 0) {
                                     const Complex fm =
                                         values[static_cast<std::size_t>(k * grid.n_angles + j + grid.n_angles / 2)];
                                     const double gap = std::abs(fz + fm);
                                     if (gap > 1e-10) out.push_back({"f(-z) = -f(z)", z, gap, 1e-10});
                                 }
                                 if (ord.alpha() == 0.0) {
                                     const double im = std::abs((fz / z).imag());
                                     if (im >= 0.25 * kPi + 1e-9) out.push_back({"|Im f(z)/z| < pi/4", z, im, 0.25 * kPi});
                                 }
                             }
                         }
                     });
}

double StarlikeReport::minimum() const {
    double best = std::numeric_limits<double>::infinity();
    for (const PairRecord& p : pairs) best = std::min(best, p.min_re);
    return best;
}

PolarGrid starlike_grid() { return PolarGrid{20, 50, 0.999}; }

StarlikeReport starlike_average_sweep(const Order& ord, std::uint64_t seed, int pairs, const PolarGrid& grid) {
    StarlikeReport report{ord.alpha(), seed, grid, {}};
    report.pairs.resize(static_cast<std::size_t>(std::max(pairs, 0)));
    detail::parallel_for(pairs, [&](int i) {
        const std::uint64_t sf = trial_seed(seed, 2 * static_cast<std::uint64_t>(i));
        const std::uint64_t sg = trial_seed(seed, 2 * static_cast<std::uint64_t>(i) + 1);
        const GeneratedFunction fs[] = {trial_function(ord, sf, false), trial_function(ord, sg, false)};
        const double weights[] = {0.5, 0.5};
        report.pairs[static_cast<std::size_t>(i)] = {i, sf, sg, min_re_star(fs, weights, grid)};
    });
    return report;
}

}  // namespace korder
