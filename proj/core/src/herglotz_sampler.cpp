#include "korder/herglotz_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "korder/error.hpp"
#include "korder/extremal_family.hpp"
#include "korder/quadrature.hpp"
#include "korder/random.hpp"

namespace korder {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kMaxSegment = 0.1;

double circular_gap(double a, double b) {
    const double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

double shift_by_pi(double t) {
    const double s = t + kPi;
    return s >= kTwoPi ? s - kTwoPi : s;
}

void require_open_disk(Complex z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("generated functions are evaluated on the open disk");
}

}  // namespace

void require_valid_grid(const PolarGrid& grid) {
    if (grid.n_radii < 1 || grid.n_angles < 1) throw DomainError("grid needs positive counts");
    if (!(grid.r_max > 0.0 && grid.r_max < 1.0)) throw DomainError("grid radius must lie in (0, 1)");
}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, bool odd_symmetric)
    : atoms_(std::move(atoms)), odd_(odd_symmetric) {
    if (atoms_.empty()) throw DomainError("measure needs at least one atom");
    double total = 0.0;
    for (const Atom& a : atoms_) {
        if (!(a.weight > 0.0)) throw DomainError("atom weights must be positive");
        if (!(a.angle >= 0.0 && a.angle < kTwoPi)) throw DomainError("atom angles must lie in [0, 2 pi)");
        total += a.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) throw DomainError("atom weights must sum to 1");
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        for (std::size_t j = i + 1; j < atoms_.size(); ++j) {
            if (circular_gap(atoms_[i].angle, atoms_[j].angle) < 1e-12) {
                throw DomainError("atom angles must be pairwise distinct");
            }
        }
    }
    if (odd_) {
        for (const Atom& a : atoms_) {
            const double partner = shift_by_pi(a.angle);
            const bool found = std::any_of(atoms_.begin(), atoms_.end(), [&](const Atom& b) {
                return circular_gap(b.angle, partner) < 1e-12 && std::abs(b.weight - a.weight) <= 1e-12;
            });
            if (!found) throw DomainError("odd-symmetric measure must be closed under t -> t + pi");
        }
    }
}

AtomicMeasure AtomicMeasure::point_mass() { return AtomicMeasure({{0.0, 1.0}}); }

GeneratedFunction::GeneratedFunction(Order ord, AtomicMeasure measure)
    : ord_(ord), measure_(std::move(measure)) {
    for (const Atom& a : measure_.atoms()) {
        rotations_.push_back(a.angle == 0.0 ? Complex(1.0, 0.0) : std::polar(1.0, -a.angle));
        exponents_.push_back(ord_.beta() * a.weight);
    }
}

Complex GeneratedFunction::derivative(Complex z) const {
    require_open_disk(z);
    Complex log_sum = 0.0;
    for (std::size_t j = 0; j < rotations_.size(); ++j) {
        log_sum += exponents_[j] * log_one_minus(z * rotations_[j]);
    }
    return std::exp(-log_sum);
}

Complex GeneratedFunction::log_derivative(Complex z) const {
    require_open_disk(z);
    Complex sum = 0.0;
    for (std::size_t j = 0; j < rotations_.size(); ++j) {
        sum += exponents_[j] * rotations_[j] / (1.0 - z * rotations_[j]);
    }
    return sum;
}

Complex GeneratedFunction::convexity(Complex z) const { return 1.0 + z * log_derivative(z); }

Complex GeneratedFunction::integrate_segment(Complex from, Complex to) const {
    const GaussLegendreRule& rule = gauss_legendre_64();
    const Complex half = 0.5 * (to - from);
    const Complex mid = 0.5 * (to + from);
    Complex sum = 0.0;
    for (int i = 0; i < kGaussNodes; ++i) {
        sum += rule.weights[i] * derivative(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

Complex GeneratedFunction::value(Complex z) const {
    require_open_disk(z);
    if (z == Complex(0.0, 0.0)) return 0.0;
    const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(z) / kMaxSegment)));
    Complex total = 0.0;
    for (int p = 0; p < pieces; ++p) {
        total += integrate_segment(z * (static_cast<double>(p) / pieces), z * (static_cast<double>(p + 1) / pieces));
    }
    return total;
}

std::vector<Complex> GeneratedFunction::values_on_ray(double angle, std::span<const double> radii) const {
    const Complex direction = std::polar(1.0, angle);
    std::vector<Complex> out;
    out.reserve(radii.size());
    double r_prev = 0.0;
    Complex acc = 0.0;
    for (double r : radii) {
        if (!(r >= r_prev && r < 1.0)) throw DomainError("ray radii must be ascending and below 1");
        const double span = r - r_prev;
        if (span > 0.0) {
            const int pieces = std::max(1, static_cast<int>(std::ceil(span / kMaxSegment)));
            for (int p = 0; p < pieces; ++p) {
                const double a = r_prev + span * p / pieces;
                const double b = r_prev + span * (p + 1) / pieces;
                acc += integrate_segment(a * direction, b * direction);
            }
        }
        out.push_back(acc);
        r_prev = r;
    }
    return out;
}

AtomicMeasure random_measure(std::uint64_t seed, int m, bool odd) {
    if (m < 1) throw DomainError("random measure needs m >= 1");
    CounterRng rng(seed);
    std::vector<double> angles;
    angles.reserve(static_cast<std::size_t>(m));
    while (static_cast<int>(angles.size()) < m) {
        const double t = kTwoPi * rng.uniform();
        const bool clash = std::any_of(angles.begin(), angles.end(), [&](double s) {
            return circular_gap(s, t) < 1e-9 || (odd && circular_gap(shift_by_pi(s), t) < 1e-9);
        });
        if (!clash) angles.push_back(t);
    }
    std::vector<double> raw(static_cast<std::size_t>(m));
    for (double& w : raw) w = -std::log1p(-rng.uniform());
    const double total = std::accumulate(raw.begin(), raw.end(), 0.0);

    std::vector<Atom> atoms;
    const double share = odd ? 0.5 : 1.0;
    for (int i = 0; i < m; ++i) {
        const double w = share * raw[static_cast<std::size_t>(i)] / total;
        atoms.push_back({angles[static_cast<std::size_t>(i)], w});
        if (odd) atoms.push_back({shift_by_pi(angles[static_cast<std::size_t>(i)]), w});
    }
    if (m == 1 && !odd) atoms.front().weight = 1.0;
    return AtomicMeasure(std::move(atoms), odd);
}

double convex_order_estimate(const GeneratedFunction& gf, const PolarGrid& grid) {
    return grid_minimum(grid, [&](Complex z) { return gf.convexity(z).real(); });
}

std::vector<Complex> values_on_grid(const GeneratedFunction& gf, const PolarGrid& grid) {
    require_valid_grid(grid);
    std::vector<double> radii;
    for (int k = 0; k < grid.n_radii; ++k) radii.push_back(grid.radius(k));
    std::vector<Complex> out(static_cast<std::size_t>(grid.size()));
    for (int j = 0; j < grid.n_angles; ++j) {
        const std::vector<Complex> ray = gf.values_on_ray(grid.angle(j), radii);
        for (int k = 0; k < grid.n_radii; ++k) {
            out[static_cast<std::size_t>(k * grid.n_angles + j)] = ray[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

double min_re_star(std::span<const GeneratedFunction> fs, std::span<const double> weights, const PolarGrid& grid) {
    if (fs.empty() || fs.size() != weights.size()) throw DomainError("one positive weight per function required");
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw DomainError("weights must be positive");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw DomainError("weights must sum to 1");

    std::vector<Complex> h(static_cast<std::size_t>(grid.size()), 0.0);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const std::vector<Complex> values = values_on_grid(fs[i], grid);
        for (std::size_t p = 0; p < h.size(); ++p) h[p] += weights[i] * values[p];
    }
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid.n_radii; ++k) {
        for (int j = 0; j < grid.n_angles; ++j) {
            const Complex z = grid.point(k, j);
            Complex dh = 0.0;
            for (std::size_t i = 0; i < fs.size(); ++i) dh += weights[i] * fs[i].derivative(z);
            const Complex hz = h[static_cast<std::size_t>(k * grid.n_angles + j)];
            if (hz == Complex(0.0, 0.0)) throw EvaluationError("weighted sum vanishes at a grid point");
            best = std::min(best, (z * dh / hz).real());
        }
    }
    return best;
}

CoveringVerdict covering_radius_check(const GeneratedFunction& gf, double rho, int n_angles, double tol) {
    if (!(rho > 0.0)) throw DomainError("covering radius must be positive");
    if (n_angles < 1) throw DomainError("need at least one angle");
    constexpr double kRadii[] = {0.9, 0.99, 0.999};
    CoveringVerdict verdict{true, std::numeric_limits<double>::infinity(), 0.0, 0.0};
    for (int j = 0; j < n_angles; ++j) {
        const double angle = 2.0 * kPi * j / n_angles;
        const std::vector<Complex> ray = gf.values_on_ray(angle, kRadii);
        for (std::size_t k = 0; k < ray.size(); ++k) {
            const double ratio = std::abs(ray[k]) / (rho * kRadii[k]);
            if (ratio < verdict.min_ratio) {
                verdict.min_ratio = ratio;
                verdict.witness_angle = angle;
                verdict.witness_radius = kRadii[k];
            }
        }
    }
    verdict.pass = verdict.min_ratio >= 1.0 - tol;
    return verdict;
}

ImRatioVerdict im_ratio_bound_check(const GeneratedFunction& gf, double bound, const PolarGrid& grid) {
    const std::vector<Complex> values = values_on_grid(gf, grid);
    ImRatioVerdict verdict{true, 0.0, 0.0};
    for (int k = 0; k < grid.n_radii; ++k) {
        for (int j = 0; j < grid.n_angles; ++j) {
            const Complex z = grid.point(k, j);
            const double im = std::abs((values[static_cast<std::size_t>(k * grid.n_angles + j)] / z).imag());
            if (im > verdict.max_abs_im) {
                verdict.max_abs_im = im;
                verdict.witness = z;
            }
        }
    }
    verdict.pass = verdict.max_abs_im <= bound;
    return verdict;
}

}  // namespace korder
