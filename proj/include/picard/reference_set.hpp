#pragma once

#include <vector>

#include "picard/node_family.hpp"

namespace picard {

// Reference nodes on [a, b] together with the quadrature weights used by the
// collocation solvers:
//
//   W[j][k]        = (1/(b-a)) * integral_a^{xi_k} l_j(xi) dxi
//   end_weights[j] = (1/(b-a)) * integral_a^b      l_j(xi) dxi
//
// where l_j are the Lagrange basis polynomials of the nodes. The 1/(b-a)
// factor makes the collocation identity
//   u(x_{i,k}) = u(x_i) + h * sum_j W[j][k] * f(x_{i,j}, u(x_{i,j}))
// hold verbatim on any reference interval. omega = max_j sum_k |W[j][k]| is
// the constant of the contraction condition h * omega * N * L < 1.
struct ReferenceSet {
    NodeFamily family;
    int m;
    double a;
    double b;
    std::vector<double> nodes;          // ascending, within [a, b]
    std::vector<std::vector<double>> W; // m x m, W[j][k], j = basis, k = node
    std::vector<double> end_weights;    // m entries
    double omega;
};

// Builds (or returns the cached) reference set for (family, m). The result is
// immutable and lives for the duration of the program; callers may share it
// freely across threads. Valid range: 1 <= m <= 12 (2 <= m for equidistant
// and chebyshev2); beyond 12 the equidistant Lagrange weights are too
// ill-conditioned to trust. Throws std::invalid_argument outside the range.
const ReferenceSet& build_reference_set(NodeFamily family, int m);

// Images x_{i,j} = x_lo + h * (xi_j - a)/(b - a) of the reference nodes under
// the affine map taking [a, b] onto [x_lo, x_lo + h]. Requires h > 0.
std::vector<double> map_to_interval(const ReferenceSet& rs, double x_lo, double h);

} // namespace picard
