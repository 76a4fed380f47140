#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "korder/herglotz_sampler.hpp"

namespace korder {

// Seeded randomized sweeps over generated members of K(alpha). Each trial
// draws its function from trial_seed(seed, index), so records are identical
// whether trials run sequentially or on several threads.

struct Violation {
    std::string invariant;
    Complex z;
    double measured;
    double limit;
};

struct TrialRecord {
    int index;
    std::uint64_t seed;
    AtomicMeasure measure;
    std::vector<Violation> violations;
};

struct SweepReport {
    std::string name;
    double alpha;
    std::uint64_t seed;
    std::vector<TrialRecord> records;  // ordered by trial index

    std::size_t violation_count() const;
    bool ok() const { return violation_count() == 0; }
};

/// Random member of K(alpha) for one trial: 1 to 4 atoms (doubled when odd).
GeneratedFunction trial_function(const Order& ord, std::uint64_t trial_seed_value, bool odd);

/// f(z)/z stays in D_alpha: membership is never `outside` at tolerance tol
/// for points_per_trial random z with |z| <= 0.99.
SweepReport subordination_sweep(const Order& ord, std::uint64_t seed, int trials, int points_per_trial = 100,
                                double tol = 1e-6);

/// On |z| = r for r in {0.5, 0.9, 0.99}:
///   h(-r) - 1e-9 <= Re f(z)/z <= h(r) + 1e-9   and   -k(-r) - 1e-9 <= |f(z)| <= k(r) + 1e-9.
SweepReport growth_sweep(const Order& ord, std::uint64_t seed, int trials, int n_angles = 36);

/// Odd measures: f(-z) = -f(z) within 1e-10, and at alpha = 0 also
/// |Im f(z)/z| < pi/4 + 1e-9 on the grid.
SweepReport odd_sweep(const Order& ord, std::uint64_t seed, int trials, const PolarGrid& grid);

struct PairRecord {
    int index;
    std::uint64_t seed_f;
    std::uint64_t seed_g;
    double min_re;
};

struct StarlikeReport {
    double alpha;
    std::uint64_t seed;
    PolarGrid grid;
    std::vector<PairRecord> pairs;

    double minimum() const;
    bool ok(double floor = -1e-9) const { return minimum() >= floor; }
};

/// Default grid for the starlike-average sweep: 20 x 50 = 1000 points, r <= 0.999.
PolarGrid starlike_grid();

/// min Re[z h'/h] for h = (f + g)/2 over `pairs` random pairs in K(alpha).
StarlikeReport starlike_average_sweep(const Order& ord, std::uint64_t seed, int pairs,
                                      const PolarGrid& grid = starlike_grid());

}  // namespace korder
