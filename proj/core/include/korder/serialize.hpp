#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "korder/boundary_geometry.hpp"
#include "korder/classical_criteria.hpp"
#include "korder/extremal_solver.hpp"
#include "korder/property_sweeps.hpp"
#include "korder/verify_harness.hpp"

namespace korder {

using Json = nlohmann::ordered_json;

/// Non-finite doubles become the strings "inf", "-inf" or "nan" so the
/// output stays valid JSON.
Json real_json(double x);
Json complex_json(Complex z);  // {"re": ..., "im": ...}

Json to_json(const QResult& q);
Json to_json(const AtomicMeasure& m);
Json to_json(const SweepReport& r);
Json to_json(const StarlikeReport& r);
Json to_json(const CounterexampleReport& r);
Json to_json(const Interval& i);
Json to_json(const VerificationReport& r);

/// %.17g, so every double round-trips.
std::string format_real(double x);

/// Like Json::dump but every floating value is printed with format_real.
std::string dump(const Json& j, int indent = 2);

/// Header "theta,u,v,phi" then one row per sample.
void write_boundary_csv(std::ostream& out, const std::vector<BoundarySample>& samples);

}  // namespace korder
