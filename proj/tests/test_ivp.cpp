#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "picard/ivp.hpp"
#include "picard/reference_set.hpp"

using picard::EvalCounter;
using picard::OdeProblem;
using picard::SolutionTrace;
using picard::Vec;

namespace {

OdeProblem scalar_problem() {
    OdeProblem p;
    p.name = "scalar";
    p.dim = 1;
    p.rhs = [](double, const Vec& y) { return Vec{-y[0]}; };
    p.y0 = {1.0};
    p.x0 = 0.0;
    p.xf = 1.0;
    p.exact = [](double x) { return Vec{std::exp(-x)}; };
    return p;
}

} // namespace

TEST_CASE("enum parsing round-trips and rejects unknown tags") {
    CHECK(picard::parse_method("fixed") == picard::Method::fixed);
    CHECK(picard::parse_method("variable") == picard::Method::variable);
    CHECK(picard::parse_method("stiff") == picard::Method::stiff);
    CHECK(picard::method_name(picard::Method::variable) == "variable");
    CHECK_THROWS_AS(picard::parse_method("implicit"), std::invalid_argument);

    CHECK(picard::parse_endpoint_variant("last-node") == picard::EndpointVariant::last_node);
    CHECK(picard::parse_endpoint_variant("end-integral") ==
          picard::EndpointVariant::end_integral);
    CHECK(picard::endpoint_variant_name(picard::EndpointVariant::end_integral) ==
          "end-integral");
    CHECK_THROWS_AS(picard::parse_endpoint_variant("midpoint"), std::invalid_argument);
}

TEST_CASE("EvalCounter counts ticks") {
    EvalCounter counter;
    CHECK(counter.count() == 0);
    counter.tick();
    counter.tick();
    CHECK(counter.count() == 2);
}

TEST_CASE("eval_rhs counts calls and validates the result") {
    OdeProblem p = scalar_problem();
    EvalCounter counter;
    const Vec out = picard::eval_rhs(p, 0.0, {2.0}, counter, 4);
    CHECK(out.size() == 1);
    CHECK(out[0] == doctest::Approx(-2.0));
    CHECK(counter.count() == 1);

    SUBCASE("dimension mismatch is an error") {
        p.rhs = [](double, const Vec&) { return Vec{1.0, 2.0}; };
        CHECK_THROWS_AS(picard::eval_rhs(p, 0.0, {1.0}, counter, 0),
                        std::invalid_argument);
    }
    SUBCASE("non-finite output raises DivergenceError carrying the interval") {
        p.rhs = [](double, const Vec&) {
            return Vec{std::numeric_limits<double>::quiet_NaN()};
        };
        try {
            picard::eval_rhs(p, 0.0, {1.0}, counter, 7);
            FAIL("expected DivergenceError");
        } catch (const picard::DivergenceError& e) {
            CHECK(e.interval() == 7);
            CHECK(std::string(e.what()).find("scalar") != std::string::npos);
        }
    }
}

TEST_CASE("check_finite flags inf and nan iterates") {
    const OdeProblem p = scalar_problem();
    CHECK_NOTHROW(picard::check_finite({0.0, -3.5}, p, 0));
    CHECK_THROWS_AS(
        picard::check_finite({std::numeric_limits<double>::infinity()}, p, 1),
        picard::DivergenceError);
}

TEST_CASE("max_error is the max-norm deviation over all mesh points") {
    OdeProblem p = scalar_problem();
    p.exact = [](double) { return Vec{1.0}; };

    SolutionTrace trace;
    trace.mesh = {0.0, 0.5, 1.0};
    trace.u = {{1.0}, {1.5}, {1.0}};
    CHECK(picard::max_error(trace, p) == doctest::Approx(0.5).epsilon(1e-15));

    SUBCASE("vector components feed the same max") {
        OdeProblem q = scalar_problem();
        q.dim = 2;
        q.exact = [](double x) { return Vec{x, -x}; };
        SolutionTrace t2;
        t2.mesh = {0.0, 1.0};
        t2.u = {{0.0, 0.0}, {1.25, -0.75}};
        CHECK(picard::max_error(t2, q) == doctest::Approx(0.25).epsilon(1e-15));
    }
    SUBCASE("problems without an exact solution cannot be scored") {
        OdeProblem q = scalar_problem();
        q.exact = nullptr;
        SolutionTrace t2;
        t2.mesh = {0.0};
        t2.u = {{1.0}};
        CHECK_THROWS_AS(picard::max_error(t2, q), std::invalid_argument);
    }
}

TEST_CASE("contraction_factor is h * omega * dim * L") {
    const auto& rs = picard::build_reference_set(picard::NodeFamily::equidistant, 3);
    const double factor = picard::contraction_factor(rs, 0.25, 2.0, 3);
    CHECK(factor == doctest::Approx(0.25 * rs.omega * 3 * 2.0).epsilon(1e-15));
    // omega for the three-node equidistant set is exactly 1.
    CHECK(factor == doctest::Approx(1.5).epsilon(1e-14));
}
