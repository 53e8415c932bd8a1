#include "picard/node_family.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "picard/poly.hpp"

namespace picard {

NodeFamily parse_family(const std::string& tag) {
    if (tag == "equidistant") return NodeFamily::equidistant;
    if (tag == "chebyshev2") return NodeFamily::chebyshev2;
    if (tag == "chebyshev1") return NodeFamily::chebyshev1;
    if (tag == "legendre-shifted") return NodeFamily::legendre_shifted;
    throw std::invalid_argument("unknown node family: " + tag);
}

std::string family_name(NodeFamily family) {
    switch (family) {
    case NodeFamily::equidistant: return "equidistant";
    case NodeFamily::chebyshev2: return "chebyshev2";
    case NodeFamily::chebyshev1: return "chebyshev1";
    case NodeFamily::legendre_shifted: return "legendre-shifted";
    }
    throw std::invalid_argument("unknown node family enumerator");
}

std::pair<double, double> family_interval(NodeFamily family) {
    switch (family) {
    case NodeFamily::equidistant:
    case NodeFamily::legendre_shifted:
        return {0.0, 1.0};
    case NodeFamily::chebyshev2:
    case NodeFamily::chebyshev1:
        return {-1.0, 1.0};
    }
    throw std::invalid_argument("unknown node family enumerator");
}

bool family_includes_endpoints(NodeFamily family) {
    return family == NodeFamily::equidistant || family == NodeFamily::chebyshev2;
}

std::vector<double> family_nodes(NodeFamily family, int m) {
    if (m < 1) {
        throw std::invalid_argument("node count m must be >= 1 (got " +
                                    std::to_string(m) + ")");
    }
    switch (family) {
    case NodeFamily::equidistant: {
        if (m < 2) {
            throw std::invalid_argument(
                "equidistant nodes need m >= 2 (the formula divides by m - 1)");
        }
        std::vector<double> nodes(m);
        for (int j = 0; j < m; ++j) {
            nodes[j] = static_cast<double>(j) / (m - 1);
        }
        return nodes;
    }
    case NodeFamily::chebyshev2: {
        if (m < 2) {
            throw std::invalid_argument(
                "chebyshev2 nodes need m >= 2 (the formula divides by m - 1)");
        }
        // -cos sorts the cosine extrema ascending on [-1, 1].
        std::vector<double> nodes(m);
        for (int j = 0; j < m; ++j) {
            nodes[j] = -std::cos(j * std::numbers::pi / (m - 1));
        }
        nodes.front() = -1.0;
        nodes.back() = 1.0;
        return nodes;
    }
    case NodeFamily::chebyshev1:
    case NodeFamily::legendre_shifted:
        return orth_poly_roots(family, m);
    }
    throw std::invalid_argument("unknown node family enumerator");
}

} // namespace picard
