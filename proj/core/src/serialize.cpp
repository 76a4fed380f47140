#include "korder/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace korder {

namespace {

void dump_into(std::string& out, const Json& j, int indent, int depth) {
    const bool pretty = indent >= 0;
    auto newline = [&](int level) {
        if (!pretty) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * level), ' ');
    };
    switch (j.type()) {
        case Json::value_t::number_float:
            out += format_real(j.get<double>());
            return;
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += Json(key).dump();
                out += pretty ? ": " : ":";
                dump_into(out, value, indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (const Json& value : j) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                dump_into(out, value, indent, depth + 1);
            }
            newline(depth);
            out += ']';
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json real_json(double x) {
    if (std::isfinite(x)) return x;
    return format_real(x);
}

Json complex_json(Complex z) { return Json{{"re", real_json(z.real())}, {"im", real_json(z.imag())}}; }

Json to_json(const QResult& q) {
    Json j;
    j["value"] = q.value.is_minus_infinity() ? Json("-inf") : real_json(q.value.value());
    j["case"] = to_string(q.case_tag);
    j["theta0"] = q.theta0 ? real_json(*q.theta0) : Json(nullptr);
    return j;
}

Json to_json(const AtomicMeasure& m) {
    Json atoms = Json::array();
    for (const Atom& a : m.atoms()) atoms.push_back({{"angle", real_json(a.angle)}, {"weight", real_json(a.weight)}});
    return {{"odd", m.odd_symmetric()}, {"atoms", atoms}};
}

Json to_json(const SweepReport& r) {
    Json trials = Json::array();
    for (const TrialRecord& t : r.records) {
        Json violations = Json::array();
        for (const Violation& v : t.violations) {
            violations.push_back({{"invariant", v.invariant},
                                  {"z", complex_json(v.z)},
                                  {"measured", real_json(v.measured)},
                                  {"limit", real_json(v.limit)}});
        }
        trials.push_back({{"index", t.index},
                          {"seed", t.seed},
                          {"measure", to_json(t.measure)},
                          {"violations", violations}});
    }
    return {{"sweep", r.name},
            {"alpha", real_json(r.alpha)},
            {"seed", r.seed},
            {"violation_count", r.violation_count()},
            {"ok", r.ok()},
            {"trials", trials}};
}

Json to_json(const StarlikeReport& r) {
    Json pairs = Json::array();
    for (const PairRecord& p : r.pairs) {
        pairs.push_back(
            {{"index", p.index}, {"seed_f", p.seed_f}, {"seed_g", p.seed_g}, {"min_re", real_json(p.min_re)}});
    }
    return {{"alpha", real_json(r.alpha)},
            {"seed", r.seed},
            {"grid", {{"n_radii", r.grid.n_radii}, {"n_angles", r.grid.n_angles}, {"r_max", real_json(r.grid.r_max)}}},
            {"minimum", real_json(r.minimum())},
            {"ok", r.ok()},
            {"pairs", pairs}};
}

Json to_json(const CounterexampleReport& r) {
    Json fixed = Json::array();
    for (std::size_t i = 0; i < r.fixed_points.size(); ++i) {
        fixed.push_back({{"z", complex_json(r.fixed_points[i])}, {"residual", real_json(r.fixed_point_residuals[i])}});
    }
    Json roots = Json::array();
    for (Complex z : r.unit_derivative_roots) roots.push_back(complex_json(z));
    return {{"alexander_sum", real_json(r.alexander.sum)},
            {"alexander_convex", r.alexander.convex},
            {"fixed_points", fixed},
            {"unit_derivative_roots", roots},
            {"derivative_at_fixed_point", complex_json(r.derivative_at_fixed_point)},
            {"verdict", r.subordination_refuted ? "not subordinate" : "undecided"}};
}

Json to_json(const Interval& i) {
    return {{"lo", real_json(i.lo)}, {"hi", real_json(i.hi)}, {"lo_closed", i.lo_closed}, {"hi_closed", i.hi_closed}};
}

Json to_json(const VerificationReport& r) {
    Json checks = Json::array();
    for (const Check& c : r.checks) {
        Json quantities = Json::array();
        for (const Quantity& q : c.quantities) {
            quantities.push_back(
                {{"label", q.label}, {"measured", real_json(q.measured)}, {"expected", to_json(q.expected)}});
        }
        Json check = {{"name", c.name}, {"quantities", quantities}};
        if (!c.verdict.empty() || !c.expected_verdict.empty()) {
            check["verdict"] = c.verdict;
            check["expected_verdict"] = c.expected_verdict;
        }
        check["tolerance"] = real_json(c.tolerance);
        check["pass"] = c.pass;
        checks.push_back(check);
    }
    return {{"overall", r.overall}, {"checks", checks}};
}

std::string dump(const Json& j, int indent) {
    std::string out;
    dump_into(out, j, indent, 0);
    return out;
}

void write_boundary_csv(std::ostream& out, const std::vector<BoundarySample>& samples) {
    out << "theta,u,v,phi\n";
    for (const BoundarySample& s : samples) {
        out << format_real(s.theta) << ',' << format_real(s.point.real()) << ',' << format_real(s.point.imag()) << ','
            << format_real(s.turning) << '\n';
    }
}

}  // namespace korder
