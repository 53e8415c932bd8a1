#pragma once

#include <utility>
#include <vector>

#include "picard/node_family.hpp"

namespace picard {

// Dense polynomial in the monomial basis. Coefficients are kept in extended
// precision because Lagrange basis polynomials on 10+ nodes have large,
// alternating coefficients whose cancellation in double arithmetic costs
// several digits in the integrated weights.
class Poly {
public:
    // The zero polynomial, represented by the single coefficient [0].
    Poly();

    // Polynomial with coefficients c_0..c_d (c[i] multiplies x^i).
    explicit Poly(std::vector<long double> coeffs);

    static Poly constant(long double c);

    // len(coeffs) - 1; the zero polynomial has degree 0.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<long double>& coeffs() const { return coeffs_; }

    long double eval(long double x) const;

    // Antiderivative with zero constant term.
    Poly antiderivative() const;

    Poly operator*(const Poly& rhs) const;
    Poly operator+(const Poly& rhs) const;
    Poly scaled(long double s) const;

private:
    std::vector<long double> coeffs_;
};

// Lagrange fundamental polynomials l_j with l_j(nodes[k]) = delta_{jk};
// for a single node the basis is the constant polynomial 1. Built by
// expanding the numerator product and dividing by the scalar denominator.
// Throws std::invalid_argument unless nodes are strictly increasing.
std::vector<Poly> lagrange_basis(const std::vector<double>& nodes);

// Exact integral of p over [lo, hi] via the antiderivative.
double integrate(const Poly& p, double lo, double hi);

// Ascending roots of the m-th orthogonal polynomial of the family:
// chebyshev1 -> roots of T_m on [-1, 1]; legendre_shifted -> roots of the
// shifted Legendre polynomial on [0, 1]. Roots are found by Newton iteration
// on the three-term recurrence from Chebyshev-angle initial guesses
// (tolerance 1e-14, at most 100 steps). Throws std::invalid_argument for
// other families or m < 1.
std::vector<double> orth_poly_roots(NodeFamily family, int m);

// g-point Gauss-Legendre rule on [0, 1]: ascending nodes and positive weights
// summing to 1, exact for polynomials of degree <= 2g - 1. Kept in extended
// precision for the weight builders, which integrate high-degree cardinal
// functions with it. Throws std::invalid_argument for g < 1.
std::pair<std::vector<long double>, std::vector<long double>>
gauss_legendre_unit(int g);

} // namespace picard
