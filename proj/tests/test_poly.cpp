#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "picard/poly.hpp"

using picard::NodeFamily;
using picard::Poly;

TEST_CASE("zero polynomial representation") {
    const Poly zero;
    CHECK(zero.degree() == 0);
    CHECK(zero.coeffs() == std::vector<long double>{0.0L});
    CHECK(zero.eval(3.7L) == 0.0L);
    // Trailing zero coefficients collapse to the canonical form.
    const Poly also_zero({0.0L, 0.0L, 0.0L});
    CHECK(also_zero.degree() == 0);
}

TEST_CASE("evaluation and arithmetic") {
    const Poly p({1.0L, -2.0L, 3.0L}); // 1 - 2x + 3x^2
    CHECK(p.eval(0.0L) == 1.0L);
    CHECK(p.eval(2.0L) == doctest::Approx(9.0).epsilon(1e-18));
    const Poly q({0.0L, 1.0L}); // x
    const Poly prod = p * q;    // x - 2x^2 + 3x^3
    CHECK(prod.degree() == 3);
    CHECK(static_cast<double>(prod.eval(2.0L)) == doctest::Approx(18.0));
    const Poly sum = p + q; // 1 - x + 3x^2
    CHECK(static_cast<double>(sum.eval(1.0L)) == doctest::Approx(3.0));
}

TEST_CASE("antiderivative gives exact integrals") {
    // integral of p over [a, x] equals the antiderivative difference for any
    // polynomial, without quadrature.
    const Poly p({0.0L, 0.0L, 3.0L}); // 3x^2
    const Poly anti = p.antiderivative();
    CHECK(static_cast<double>(anti.eval(2.0L) - anti.eval(1.0L)) ==
          doctest::Approx(7.0).epsilon(1e-15));
}

TEST_CASE("integrate on simple polynomials") {
    CHECK(picard::integrate(Poly::constant(1.0L), 0.0, 0.5) ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(picard::integrate(Poly({0.0L, 1.0L}), 0.0, 1.0) ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(picard::integrate(Poly({0.0L, 0.0L, 3.0L}), -1.0, 1.0) ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK(picard::integrate(Poly({5.0L, 4.0L, 3.0L}), 0.7, 0.7) == 0.0);
}

TEST_CASE("integrate is exact on monomials up to degree 20") {
    const double lo = -0.8;
    const double hi = 1.3;
    std::vector<long double> coeffs{1.0L};
    for (int d = 0; d <= 20; ++d) {
        const Poly mono(coeffs);
        const double expected =
            (std::pow(hi, d + 1) - std::pow(lo, d + 1)) / (d + 1);
        CHECK(picard::integrate(mono, lo, hi) ==
              doctest::Approx(expected).epsilon(1e-13));
        coeffs.insert(coeffs.begin(), 0.0L); // shift to the next monomial
    }
}

TEST_CASE("lagrange basis: single node is the constant 1") {
    const auto basis = picard::lagrange_basis({0.5});
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].degree() == 0);
    CHECK(static_cast<double>(basis[0].eval(0.123L)) == doctest::Approx(1.0));
}

TEST_CASE("lagrange basis: linear cardinal functions on {0, 1}") {
    const auto basis = picard::lagrange_basis({0.0, 1.0});
    REQUIRE(basis.size() == 2);
    CHECK(static_cast<double>(basis[0].eval(0.0L)) == doctest::Approx(1.0));
    CHECK(static_cast<double>(basis[0].eval(1.0L)) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK(static_cast<double>(basis[0].eval(0.25L)) == doctest::Approx(0.75));
    CHECK(static_cast<double>(basis[1].eval(0.25L)) == doctest::Approx(0.25));
}

TEST_CASE("lagrange basis: cardinality on {0, 1/2, 1}") {
    const auto basis = picard::lagrange_basis({0.0, 0.5, 1.0});
    CHECK(static_cast<double>(basis[1].eval(0.5L)) == doctest::Approx(1.0));
    CHECK(static_cast<double>(basis[1].eval(0.0L)) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK(static_cast<double>(basis[1].eval(1.0L)) ==
          doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("lagrange basis rejects bad node lists") {
    CHECK_THROWS_AS(picard::lagrange_basis({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(picard::lagrange_basis({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(picard::lagrange_basis({}), std::invalid_argument);
}

TEST_CASE("partition of unity and cardinality for every family, m <= 10") {
    struct Case {
        NodeFamily family;
        int m_lo;
    };
    for (const Case c : {Case{NodeFamily::equidistant, 2},
                         Case{NodeFamily::chebyshev2, 2},
                         Case{NodeFamily::chebyshev1, 1},
                         Case{NodeFamily::legendre_shifted, 1}}) {
        const auto [a, b] = picard::family_interval(c.family);
        for (int m = c.m_lo; m <= 10; ++m) {
            const auto nodes = picard::family_nodes(c.family, m);
            const auto basis = picard::lagrange_basis(nodes);
            for (int s = 0; s < 64; ++s) {
                const long double x = a + (b - a) * (s + 0.5L) / 64.0L;
                long double sum = 0.0L;
                for (const auto& l : basis) {
                    sum += l.eval(x);
                }
                CHECK(std::fabs(static_cast<double>(sum) - 1.0) <= 1e-11);
            }
            for (int j = 0; j < m; ++j) {
                for (int k = 0; k < m; ++k) {
                    const double expected = j == k ? 1.0 : 0.0;
                    CHECK(std::fabs(static_cast<double>(
                              basis[j].eval(nodes[k])) - expected) <= 1e-11);
                }
            }
        }
    }
}

TEST_CASE("legendre-shifted roots") {
    SUBCASE("m=1 midpoint") {
        const auto roots = picard::orth_poly_roots(NodeFamily::legendre_shifted, 1);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0] == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("m=2 against the quadratic formula") {
        // Independent oracle: the degree-2 shifted Legendre polynomial is
        // 6x^2 - 6x + 1, with roots 1/2 -+ sqrt(3)/6.
        const auto roots = picard::orth_poly_roots(NodeFamily::legendre_shifted, 2);
        REQUIRE(roots.size() == 2);
        const double s = std::sqrt(3.0) / 6.0;
        CHECK(std::fabs(roots[0] - (0.5 - s)) <= 1e-14);
        CHECK(std::fabs(roots[1] - (0.5 + s)) <= 1e-14);
    }
    SUBCASE("roots are ascending and satisfy the recurrence polynomial") {
        for (int m = 1; m <= 12; ++m) {
            const auto roots =
                picard::orth_poly_roots(NodeFamily::legendre_shifted, m);
            REQUIRE(static_cast<int>(roots.size()) == m);
            for (int i = 1; i < m; ++i) {
                CHECK(roots[i - 1] < roots[i]);
            }
            for (double root : roots) {
                // Evaluate the (monic-normalized) Legendre recurrence at the
                // mapped point; the scale of P_m on [-1, 1] is O(1).
                const double t = 2.0 * root - 1.0;
                double p0 = 1.0;
                double p1 = t;
                for (int k = 1; k < m; ++k) {
                    const double p2 = ((2 * k + 1) * t * p1 - k * p0) / (k + 1);
                    p0 = p1;
                    p1 = p2;
                }
                CHECK(std::fabs(m == 0 ? p0 : p1) <= 1e-13);
            }
        }
    }
}

TEST_CASE("chebyshev1 roots match the closed-form cosines") {
    const auto pi = std::numbers::pi;
    SUBCASE("m=2") {
        const auto roots = picard::orth_poly_roots(NodeFamily::chebyshev1, 2);
        REQUIRE(roots.size() == 2);
        CHECK(std::fabs(roots[0] + std::sqrt(2.0) / 2.0) <= 1e-14);
        CHECK(std::fabs(roots[1] - std::sqrt(2.0) / 2.0) <= 1e-14);
    }
    SUBCASE("m <= 12") {
        for (int m = 1; m <= 12; ++m) {
            const auto roots = picard::orth_poly_roots(NodeFamily::chebyshev1, m);
            for (int j = 1; j <= m; ++j) {
                // cos((2j-1)pi/2m) descends in j; our roots ascend.
                const double closed = std::cos((2.0 * j - 1.0) * pi / (2 * m));
                CHECK(std::fabs(roots[m - j] - closed) <= 1e-13);
            }
        }
    }
}

TEST_CASE("orth_poly_roots rejects unsupported input") {
    CHECK_THROWS_AS(picard::orth_poly_roots(NodeFamily::equidistant, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(picard::orth_poly_roots(NodeFamily::chebyshev2, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(picard::orth_poly_roots(NodeFamily::legendre_shifted, 0),
                    std::invalid_argument);
}

TEST_CASE("gauss_legendre_unit: closed forms for g=1 and g=2") {
    SUBCASE("g=1 is the midpoint rule") {
        const auto [nodes, weights] = picard::gauss_legendre_unit(1);
        REQUIRE(nodes.size() == 1);
        REQUIRE(weights.size() == 1);
        CHECK(std::fabs(static_cast<double>(nodes[0]) - 0.5) <= 1e-17);
        CHECK(std::fabs(static_cast<double>(weights[0]) - 1.0) <= 1e-17);
    }
    SUBCASE("g=2 nodes are 1/2 -+ sqrt(3)/6 with equal weights") {
        const auto [nodes, weights] = picard::gauss_legendre_unit(2);
        REQUIRE(nodes.size() == 2);
        const double s = std::sqrt(3.0) / 6.0;
        CHECK(std::fabs(static_cast<double>(nodes[0]) - (0.5 - s)) <= 1e-16);
        CHECK(std::fabs(static_cast<double>(nodes[1]) - (0.5 + s)) <= 1e-16);
        CHECK(std::fabs(static_cast<double>(weights[0]) - 0.5) <= 1e-16);
        CHECK(std::fabs(static_cast<double>(weights[1]) - 0.5) <= 1e-16);
    }
}

TEST_CASE("gauss_legendre_unit: positivity, normalization, exactness") {
    for (int g = 1; g <= 10; ++g) {
        const auto [nodes, weights] = picard::gauss_legendre_unit(g);
        REQUIRE(static_cast<int>(nodes.size()) == g);
        REQUIRE(static_cast<int>(weights.size()) == g);
        long double total = 0.0L;
        for (int i = 0; i < g; ++i) {
            CHECK(weights[i] > 0.0L);
            CHECK(nodes[i] > 0.0L);
            CHECK(nodes[i] < 1.0L);
            if (i > 0) {
                CHECK(nodes[i - 1] < nodes[i]);
            }
            total += weights[i];
        }
        CHECK(std::fabs(static_cast<double>(total) - 1.0) <= 1e-17);
        // Exact for x^k up to degree 2g - 1: integral over [0, 1] is 1/(k+1).
        for (int k = 0; k <= 2 * g - 1; ++k) {
            long double sum = 0.0L;
            for (int i = 0; i < g; ++i) {
                long double p = 1.0L;
                for (int e = 0; e < k; ++e) {
                    p *= nodes[i];
                }
                sum += weights[i] * p;
            }
            CHECK(std::fabs(static_cast<double>(sum) - 1.0 / (k + 1)) <= 1e-16);
        }
    }
}

TEST_CASE("gauss_legendre_unit rejects g < 1") {
    CHECK_THROWS_AS(picard::gauss_legendre_unit(0), std::invalid_argument);
    CHECK_THROWS_AS(picard::gauss_legendre_unit(-2), std::invalid_argument);
}
