#include "picard/reference_set.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "picard/poly.hpp"

namespace picard {

namespace {

ReferenceSet build_uncached(NodeFamily family, int m) {
    if (m < 1) {
        throw std::invalid_argument("build_reference_set: m must be >= 1 (got " +
                                    std::to_string(m) + ")");
    }
    if (m > 12) {
        throw std::invalid_argument(
            "build_reference_set: m must be <= 12 (got " + std::to_string(m) +
            "); larger Lagrange weight sets are too ill-conditioned");
    }
    ReferenceSet rs;
    rs.family = family;
    rs.m = m;
    std::tie(rs.a, rs.b) = family_interval(family);
    rs.nodes = family_nodes(family, m);

    const std::vector<Poly> basis = lagrange_basis(rs.nodes);
    const long double a = static_cast<long double>(rs.a);
    const long double width = static_cast<long double>(rs.b) - a;

    rs.W.assign(m, std::vector<double>(m, 0.0));
    rs.end_weights.assign(m, 0.0);
    rs.omega = 0.0;
    for (int j = 0; j < m; ++j) {
        const Poly anti = basis[j].antiderivative();
        const long double at_a = anti.eval(a);
        double row_abs_sum = 0.0;
        for (int k = 0; k < m; ++k) {
            const long double at_k = anti.eval(static_cast<long double>(rs.nodes[k]));
            rs.W[j][k] = static_cast<double>((at_k - at_a) / width);
            row_abs_sum += std::fabs(rs.W[j][k]);
        }
        rs.end_weights[j] =
            static_cast<double>((anti.eval(static_cast<long double>(rs.b)) - at_a) / width);
        rs.omega = std::max(rs.omega, row_abs_sum);
    }
    return rs;
}

} // namespace

const ReferenceSet& build_reference_set(NodeFamily family, int m) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<const ReferenceSet>> cache;

    const auto key = std::make_pair(static_cast<int>(family), m);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<const ReferenceSet>(
                                    build_uncached(family, m)))
                 .first;
    }
    return *it->second;
}

std::vector<double> map_to_interval(const ReferenceSet& rs, double x_lo, double h) {
    if (!(h > 0.0)) {
        throw std::invalid_argument("map_to_interval: h must be positive");
    }
    std::vector<double> xs(rs.nodes.size());
    const double width = rs.b - rs.a;
    for (std::size_t j = 0; j < rs.nodes.size(); ++j) {
        xs[j] = x_lo + h * (rs.nodes[j] - rs.a) / width;
    }
    return xs;
}

} // namespace picard
