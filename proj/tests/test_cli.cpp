#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "korder/order.hpp"

using korder::Complex;
using korder::kPi;
using korder::cli::parse_complex;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = korder::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("complex literal parsing") {
    CHECK(parse_complex("0.5+0i") == Complex(0.5, 0.0));
    CHECK(parse_complex("-0.25-0.5i") == Complex(-0.25, -0.5));
    CHECK(parse_complex("0.3") == Complex(0.3, 0.0));
    CHECK(parse_complex("0.7i") == Complex(0.0, 0.7));
    CHECK(parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(parse_complex("i") == Complex(0.0, 1.0));
    CHECK(parse_complex("1e-3+2.5e-1i") == Complex(1e-3, 0.25));
    CHECK(parse_complex("1e-3-2e-2i") == Complex(1e-3, -0.02));
    CHECK(parse_complex("+0.1+i") == Complex(0.1, 1.0));
    for (const char* bad : {"", "abc", "0.5+", "1+2j", "0.5 + 1i", "nan", "1+nani", "--1"}) {
        CHECK_THROWS_AS(parse_complex(bad), std::invalid_argument);
    }
}

TEST_CASE("eval") {
    const auto r = run({"eval", "--alpha", "0.5", "--z", "0.5+0i"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["h"]["re"].get<double>() == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-15));
    CHECK(j["h"]["im"].get<double>() == 0.0);
    CHECK(j.contains("k"));
    CHECK(j.contains("h_prime"));
    CHECK(j.contains("convexity_transform"));
    CHECK(r.out.find("1.3862943611198906") != std::string::npos);
}

TEST_CASE("eval errors exit with status 2") {
    CHECK(run({"eval", "--alpha", "1.0", "--z", "0"}).code == 2);
    CHECK(run({"eval", "--alpha", "0.3", "--z", "1+0i"}).code == 2);
    CHECK(run({"eval", "--alpha", "0.3", "--z", "2"}).code == 2);
    const auto bad = run({"eval", "--alpha", "0.3", "--z", "x"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"eval", "--alpha", "0.3"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("boundary csv") {
    const auto r = run({"boundary", "--alpha", "0.6", "--samples", "25", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 26);
    CHECK(rows[0] == "theta,u,v,phi");
    CHECK(rows.back().rfind("3.1415926535897931,", 0) == 0);
    CHECK(run({"boundary", "--alpha", "0.6", "--samples", "25"}).out == r.out);

    const auto j = run({"boundary", "--alpha", "0.8", "--samples", "4", "--theta-min", "0", "--format", "json"});
    REQUIRE(j.code == 0);
    CHECK(json::parse(j.out)["samples"].size() == 4);

    CHECK(run({"boundary", "--alpha", "0.4", "--samples", "4", "--theta-min", "0"}).code == 2);
    CHECK(run({"boundary", "--alpha", "0.4", "--samples", "4", "--format", "xml"}).code == 2);
}

TEST_CASE("extremal-m") {
    const auto r = run({"extremal-m", "--alpha", "0.6"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["theta_alpha"].get<double>() > 0.11);
    CHECK(j["theta_alpha"].get<double>() < 0.114);
    CHECK(j["M"].get<double>() < 0.743488);
    const json half = json::parse(run({"extremal-m", "--alpha", "0.5"}).out);
    CHECK(half["M"].get<double>() == kPi / 2);
    CHECK(half["theta_alpha"].is_null());
    CHECK(run({"extremal-m", "--alpha", "0.3"}).code == 2);
}

TEST_CASE("q") {
    const auto r = run({"q", "--alpha", "0.5", "--t", "1.5707963267948966"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"].get<double>() == -kPi / 2);
    CHECK(j["case"] == "borderline");
    CHECK(j["alpha"].get<double>() == 0.5);

    const json unb = json::parse(run({"q", "--alpha", "0.3", "--t", "1.5707963267948966"}).out);
    CHECK(unb["value"] == "-inf");
    CHECK(unb["case"] == "unbounded-below");

    const json inner = json::parse(run({"q", "--alpha", "0.3", "--t", "0.4"}).out);
    CHECK(inner["case"] == "interior-critical");
    CHECK(inner["theta0"].is_number());
}

TEST_CASE("subcheck and starlike-avg") {
    const auto r = run({"subcheck", "--alpha", "0.4", "--seed", "3", "--trials", "4"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["violation_count"] == 0);
    CHECK(j["subordination"]["trials"].size() == 4);
    CHECK(j["subordination"]["trials"][0].contains("measure"));

    const auto s = run({"starlike-avg", "--alpha", "0.6", "--seed", "0", "--pairs", "2"});
    CHECK(s.code == 0);
    CHECK(json::parse(s.out)["pairs"].size() == 2);
    CHECK(run({"starlike-avg", "--alpha", "0.6", "--pairs", "0"}).code == 2);
}

TEST_CASE("KORDER_TRIALS overrides default trial counts but not explicit flags") {
    setenv("KORDER_TRIALS", "3", 1);
    CHECK(json::parse(run({"starlike-avg", "--alpha", "0.6"}).out)["pairs"].size() == 3);
    CHECK(json::parse(run({"starlike-avg", "--alpha", "0.6", "--pairs", "2"}).out)["pairs"].size() == 2);
    setenv("KORDER_TRIALS", "zero", 1);
    CHECK(run({"starlike-avg", "--alpha", "0.6"}).code == 2);
    unsetenv("KORDER_TRIALS");
}

TEST_CASE("counterexample") {
    const auto r = run({"counterexample"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["alexander_sum"].get<double>() == doctest::Approx(0.59));
    CHECK(j["verdict"] == "not subordinate");
    CHECK(j["unit_derivative_roots"].size() == 2);
}

TEST_CASE("verify-paper reports the failing near-pole check with exit status 1") {
    const auto r = run({"verify-paper", "--seed", "0", "--trials", "4"});
    const json j = json::parse(r.out);
    CHECK(j["checks"].size() == 11);
    CHECK(j["overall"] == false);
    CHECK(r.code == 1);
    for (const auto& c : j["checks"]) {
        if (c["name"] != "kustner_consistency") CHECK(c["pass"] == true);
    }
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify-paper") != std::string::npos);
}
