#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace korder {

/// Real interval with independently open or closed ends; infinite ends allowed.
struct Interval {
    double lo;
    double hi;
    bool lo_closed = true;
    bool hi_closed = false;

    bool contains(double x) const;

    static Interval half_open(double lo, double hi) { return {lo, hi, true, false}; }
    static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
    static Interval open(double lo, double hi) { return {lo, hi, false, false}; }
    /// [center - tol, center + tol]
    static Interval around(double center, double tol) { return closed(center - tol, center + tol); }
    static Interval below(double hi) { return {-std::numeric_limits<double>::infinity(), hi, false, false}; }
    static Interval above(double lo) { return {lo, std::numeric_limits<double>::infinity(), false, false}; }
};

struct Quantity {
    std::string label;
    double measured;
    Interval expected;
};

struct Check {
    std::string name;
    std::vector<Quantity> quantities;
    std::string verdict;           // empty when the check is purely numeric
    std::string expected_verdict;
    double tolerance;
    bool pass;
};

struct VerificationReport {
    std::vector<Check> checks;  // sorted by name
    bool overall;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int trials = 200;  // per alpha for the sweeps; the starlike check uses trials/2 pairs
};

/// Reproduces every numeric claim: proof constants, sign changes, golden
/// digits, and the seeded statistical sweeps. Never throws for a failed
/// check; a failure is recorded and clears `overall`.
VerificationReport verify_all(const VerifyOptions& options = {});

/// The exact set of check names verify_all produces, sorted.
std::vector<std::string> required_check_names();

}  // namespace korder
