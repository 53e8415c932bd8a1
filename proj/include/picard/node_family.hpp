#pragma once

#include <string>
#include <utility>
#include <vector>

namespace picard {

// Families of reference nodes xi_1 < ... < xi_m on a fixed interval [a, b].
// All node lists produced by this module are sorted ascending, regardless of
// the ordering conventions of the defining formulas.
enum class NodeFamily {
    equidistant,      // xi_j = (j-1)/(m-1) on [0, 1], m >= 2
    chebyshev2,       // extrema of T_{m-1} on [-1, 1], m >= 2
    chebyshev1,       // roots of T_m on [-1, 1]
    legendre_shifted, // roots of the shifted Legendre polynomial on [0, 1]
};

// Parses a family tag ("equidistant", "chebyshev2", "chebyshev1",
// "legendre-shifted"). Throws std::invalid_argument for unknown tags.
NodeFamily parse_family(const std::string& tag);

// Canonical tag for a family (inverse of parse_family).
std::string family_name(NodeFamily family);

// Reference interval [a, b] on which the family is defined.
std::pair<double, double> family_interval(NodeFamily family);

// True when xi_1 = a and xi_m = b for every m the family supports.
bool family_includes_endpoints(NodeFamily family);

// The m reference nodes, ascending. Throws std::invalid_argument when m < 1,
// or m < 2 for the families whose formulas divide by m - 1.
std::vector<double> family_nodes(NodeFamily family, int m);

} // namespace picard
