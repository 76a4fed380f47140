#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "korder/boundary_geometry.hpp"
#include "korder/classical_criteria.hpp"
#include "korder/error.hpp"
#include "korder/extremal_family.hpp"
#include "korder/extremal_solver.hpp"
#include "korder/property_sweeps.hpp"
#include "korder/serialize.hpp"
#include "korder/verify_harness.hpp"

namespace korder::cli {

namespace {

constexpr int kDefaultTrials = 200;
constexpr int kDefaultPairs = 100;
constexpr double kStarlikeFloor = -1e-9;

double parse_real(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
        throw std::invalid_argument("not a decimal literal: '" + std::string(text) + "'");
    }
    return value;
}

// Trial counts: an explicit flag wins, then KORDER_TRIALS, then the default.
int trial_count(const CLI::Option* flag, int flag_value, int fallback) {
    if (flag->count() > 0) return flag_value;
    if (const char* env = std::getenv("KORDER_TRIALS")) {
        const double parsed = parse_real(env);
        if (parsed < 1.0 || parsed != std::floor(parsed) || parsed > 1e7) {
            throw std::invalid_argument("KORDER_TRIALS must be a positive integer");
        }
        return static_cast<int>(parsed);
    }
    return fallback;
}

struct Flags {
    double alpha = 0.0;
    std::string z;
    double t = 0.0;
    int samples = 0;
    double theta_min = 1e-6;
    std::uint64_t seed = 0;
    int trials = kDefaultTrials;
    int pairs = kDefaultPairs;
    int points = 100;
    double tolerance = 1e-6;
    std::string format = "csv";
};

int emit(std::ostream& out, const Json& j) {
    out << dump(j) << '\n';
    return kExitOk;
}

int cmd_eval(const Flags& f, std::ostream& out) {
    const Order ord(f.alpha);
    const Complex z = parse_complex(f.z);
    return emit(out, {{"alpha", real_json(f.alpha)},
                      {"z", complex_json(z)},
                      {"k", complex_json(k_alpha(ord, z))},
                      {"h", complex_json(h_alpha(ord, z))},
                      {"h_prime", complex_json(h_alpha_prime(ord, z))},
                      {"convexity_transform", complex_json(convexity_transform(ord, z))}});
}

int cmd_boundary(const Flags& f, std::ostream& out) {
    const std::vector<BoundarySample> samples = sample_boundary(Order(f.alpha), f.samples, f.theta_min);
    if (f.format == "csv") {
        write_boundary_csv(out, samples);
        return kExitOk;
    }
    Json rows = Json::array();
    for (const BoundarySample& s : samples) {
        rows.push_back({{"theta", real_json(s.theta)},
                        {"u", real_json(s.point.real())},
                        {"v", real_json(s.point.imag())},
                        {"phi", real_json(s.turning)}});
    }
    return emit(out, {{"alpha", real_json(f.alpha)}, {"samples", rows}});
}

int cmd_extremal_m(const Flags& f, std::ostream& out) {
    const Order ord(f.alpha);
    // At alpha = 1/2 the supremum pi/2 is approached as theta -> 0 but not attained.
    const Json theta = ord.is_half() ? Json(nullptr) : real_json(critical_theta(ord));
    return emit(out, {{"alpha", real_json(f.alpha)}, {"theta_alpha", theta}, {"M", real_json(im_bound(ord))}});
}

int cmd_q(const Flags& f, std::ostream& out) {
    Json j = to_json(q_infimum(Order(f.alpha), f.t));
    j["alpha"] = real_json(f.alpha);
    j["t"] = real_json(f.t);
    return emit(out, j);
}

int cmd_subcheck(const Flags& f, int trials, std::ostream& out) {
    const Order ord(f.alpha);
    const SweepReport sub = subordination_sweep(ord, f.seed, trials, f.points, f.tolerance);
    const SweepReport growth = growth_sweep(ord, f.seed, trials);
    const std::size_t violations = sub.violation_count() + growth.violation_count();
    emit(out, {{"alpha", real_json(f.alpha)},
               {"seed", f.seed},
               {"trials", trials},
               {"violation_count", violations},
               {"subordination", to_json(sub)},
               {"growth", to_json(growth)}});
    return violations == 0 ? kExitOk : kExitFailed;
}

int cmd_starlike(const Flags& f, int pairs, std::ostream& out) {
    const StarlikeReport report = starlike_average_sweep(Order(f.alpha), f.seed, pairs);
    emit(out, to_json(report));
    return report.ok(kStarlikeFloor) ? kExitOk : kExitFailed;
}

int cmd_counterexample(std::ostream& out) { return emit(out, to_json(counterexample_check())); }

int cmd_verify(const Flags& f, int trials, std::ostream& out) {
    const VerificationReport report = verify_all({f.seed, trials});
    emit(out, to_json(report));
    return report.overall ? kExitOk : kExitFailed;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty complex literal");
    if (text.back() != 'i') return {parse_real(text), 0.0};

    std::string_view body = text.substr(0, text.size() - 1);
    // The imaginary part starts at the last sign that is not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    const std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    const std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);
    double im = 0.0;
    if (im_text.empty() || im_text == "+") {
        im = 1.0;
    } else if (im_text == "-") {
        im = -1.0;
    } else {
        im = parse_real(im_text);
    }
    return {re_text.empty() ? 0.0 : parse_real(re_text), im};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerics for convex functions of order alpha"};
    app.name("korder");
    app.require_subcommand(1);
    Flags f;

    auto alpha_option = [&](CLI::App* sub) { sub->add_option("--alpha", f.alpha, "order in [0, 1)")->required(); };

    CLI::App* eval = app.add_subcommand("eval", "k, h, h' and 1 + z h''/h' at one point");
    alpha_option(eval);
    eval->add_option("--z", f.z, "point of the closed disk, e.g. 0.5+0.25i")->required();

    CLI::App* boundary = app.add_subcommand("boundary", "sample the upper boundary arc of the image domain");
    alpha_option(boundary);
    boundary->add_option("--samples", f.samples, "number of samples (>= 2)")->required();
    boundary->add_option("--theta-min", f.theta_min, "smallest sampled angle; 0 allowed for alpha > 1/2");
    boundary->add_option("--format", f.format)->check(CLI::IsMember({"csv", "json"}));

    CLI::App* extremal = app.add_subcommand("extremal-m", "critical angle and sup Im over the domain");
    alpha_option(extremal);

    CLI::App* q = app.add_subcommand("q", "inf of Re(e^{it} w) over the domain");
    alpha_option(q);
    q->add_option("--t", f.t, "direction angle")->required();

    CLI::App* subcheck = app.add_subcommand("subcheck", "seeded subordination and growth sweep");
    alpha_option(subcheck);
    subcheck->add_option("--seed", f.seed);
    CLI::Option* trials_flag = subcheck->add_option("--trials", f.trials)->check(CLI::PositiveNumber);
    subcheck->add_option("--points", f.points, "random points per trial")->check(CLI::PositiveNumber);
    subcheck->add_option("--tolerance", f.tolerance, "membership boundary band")->check(CLI::NonNegativeNumber);

    CLI::App* starlike = app.add_subcommand("starlike-avg", "min Re[z h'/h] for averages of random pairs");
    alpha_option(starlike);
    starlike->add_option("--seed", f.seed);
    CLI::Option* pairs_flag = starlike->add_option("--pairs", f.pairs)->check(CLI::PositiveNumber);

    CLI::App* counter = app.add_subcommand("counterexample", "odd convex polynomial outside the artanh bound");

    CLI::App* verify = app.add_subcommand("verify-paper", "run every numeric check and report");
    verify->add_option("--seed", f.seed);
    CLI::Option* verify_trials_flag = verify->add_option("--trials", f.trials)->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(f, out);
        if (boundary->parsed()) return cmd_boundary(f, out);
        if (extremal->parsed()) return cmd_extremal_m(f, out);
        if (q->parsed()) return cmd_q(f, out);
        if (subcheck->parsed()) return cmd_subcheck(f, trial_count(trials_flag, f.trials, kDefaultTrials), out);
        if (starlike->parsed()) return cmd_starlike(f, trial_count(pairs_flag, f.pairs, kDefaultPairs), out);
        if (counter->parsed()) return cmd_counterexample(out);
        if (verify->parsed()) return cmd_verify(f, trial_count(verify_trials_flag, f.trials, kDefaultTrials), out);
    } catch (const Error& e) {
        err << "korder: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "korder: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace korder::cli
