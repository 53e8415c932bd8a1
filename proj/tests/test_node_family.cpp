#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "picard/node_family.hpp"

using picard::NodeFamily;

TEST_CASE("family tags round-trip through parse and name") {
    for (const char* tag :
         {"equidistant", "chebyshev2", "chebyshev1", "legendre-shifted"}) {
        CHECK(picard::family_name(picard::parse_family(tag)) == tag);
    }
    CHECK_THROWS_AS(picard::parse_family("legendre"), std::invalid_argument);
    CHECK_THROWS_AS(picard::parse_family(""), std::invalid_argument);
}

TEST_CASE("reference intervals and endpoint membership") {
    CHECK(picard::family_interval(NodeFamily::equidistant) ==
          std::pair{0.0, 1.0});
    CHECK(picard::family_interval(NodeFamily::legendre_shifted) ==
          std::pair{0.0, 1.0});
    CHECK(picard::family_interval(NodeFamily::chebyshev2) ==
          std::pair{-1.0, 1.0});
    CHECK(picard::family_interval(NodeFamily::chebyshev1) ==
          std::pair{-1.0, 1.0});
    CHECK(picard::family_includes_endpoints(NodeFamily::equidistant));
    CHECK(picard::family_includes_endpoints(NodeFamily::chebyshev2));
    CHECK_FALSE(picard::family_includes_endpoints(NodeFamily::chebyshev1));
    CHECK_FALSE(picard::family_includes_endpoints(NodeFamily::legendre_shifted));
}

TEST_CASE("equidistant nodes") {
    const auto nodes = picard::family_nodes(NodeFamily::equidistant, 5);
    REQUIRE(nodes.size() == 5);
    for (int j = 0; j < 5; ++j) {
        CHECK(nodes[j] == doctest::Approx(j / 4.0).epsilon(1e-15));
    }
    CHECK_THROWS_AS(picard::family_nodes(NodeFamily::equidistant, 1),
                    std::invalid_argument);
}

TEST_CASE("chebyshev2 nodes are the ascending cosine extrema") {
    const int m = 6;
    const auto nodes = picard::family_nodes(NodeFamily::chebyshev2, m);
    REQUIRE(static_cast<int>(nodes.size()) == m);
    CHECK(nodes.front() == -1.0);
    CHECK(nodes.back() == 1.0);
    for (int j = 0; j < m; ++j) {
        const double expected = -std::cos(j * std::numbers::pi / (m - 1));
        CHECK(std::fabs(nodes[j] - expected) <= 1e-15);
        if (j > 0) {
            CHECK(nodes[j - 1] < nodes[j]);
        }
    }
    CHECK_THROWS_AS(picard::family_nodes(NodeFamily::chebyshev2, 1),
                    std::invalid_argument);
}

TEST_CASE("orthogonal families allow m = 1") {
    CHECK(picard::family_nodes(NodeFamily::legendre_shifted, 1).size() == 1);
    CHECK(picard::family_nodes(NodeFamily::chebyshev1, 1).size() == 1);
    CHECK_THROWS_AS(picard::family_nodes(NodeFamily::chebyshev1, 0),
                    std::invalid_argument);
}
