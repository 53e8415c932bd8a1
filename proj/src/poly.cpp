#include "picard/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace picard {

namespace {

void trim(std::vector<long double>& c) {
    while (c.size() > 1 && c.back() == 0.0L) {
        c.pop_back();
    }
}

} // namespace

Poly::Poly() : coeffs_{0.0L} {}

Poly::Poly(std::vector<long double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        coeffs_ = {0.0L};
    }
    trim(coeffs_);
}

Poly Poly::constant(long double c) { return Poly{{c}}; }

long double Poly::eval(long double x) const {
    long double acc = 0.0L;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::antiderivative() const {
    std::vector<long double> out(coeffs_.size() + 1, 0.0L);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i + 1] = coeffs_[i] / static_cast<long double>(i + 1);
    }
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
    std::vector<long double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0L);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly Poly::operator+(const Poly& rhs) const {
    std::vector<long double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0L);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i] += coeffs_[i];
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        out[i] += rhs.coeffs_[i];
    }
    return Poly(std::move(out));
}

Poly Poly::scaled(long double s) const {
    std::vector<long double> out = coeffs_;
    for (auto& c : out) {
        c *= s;
    }
    return Poly(std::move(out));
}

std::vector<Poly> lagrange_basis(const std::vector<double>& nodes) {
    if (nodes.empty()) {
        throw std::invalid_argument("lagrange_basis: empty node list");
    }
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (!(nodes[i - 1] < nodes[i])) {
            throw std::invalid_argument(
                "lagrange_basis: nodes must be strictly increasing");
        }
    }
    const std::size_t m = nodes.size();
    std::vector<Poly> basis;
    basis.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        Poly numerator = Poly::constant(1.0L);
        long double denominator = 1.0L;
        const long double xj = static_cast<long double>(nodes[j]);
        for (std::size_t k = 0; k < m; ++k) {
            if (k == j) {
                continue;
            }
            const long double xk = static_cast<long double>(nodes[k]);
            numerator = numerator * Poly{{-xk, 1.0L}};
            denominator *= xj - xk;
        }
        basis.push_back(numerator.scaled(1.0L / denominator));
    }
    return basis;
}

double integrate(const Poly& p, double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("integrate: bounds must be finite");
    }
    const Poly anti = p.antiderivative();
    return static_cast<double>(anti.eval(hi) - anti.eval(lo));
}

namespace {

// Legendre polynomial P_m and its derivative at t in [-1, 1], by the
// three-term recurrence.
std::pair<long double, long double> legendre_value(int m, long double t) {
    long double p0 = 1.0L;
    long double p1 = t;
    if (m == 0) {
        return {p0, 0.0L};
    }
    for (int k = 1; k < m; ++k) {
        const long double p2 = ((2 * k + 1) * t * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
    }
    const long double dp = m * (t * p1 - p0) / (t * t - 1.0L);
    return {p1, dp};
}

std::vector<double> legendre_shifted_roots(int m) {
    std::vector<double> roots(m);
    for (int i = 0; i < m; ++i) {
        // Classic asymptotic initial guess for the i-th largest root.
        long double t = std::cos(std::numbers::pi_v<long double> *
                                 (i + 0.75L) / (m + 0.5L));
        for (int step = 0; step < 100; ++step) {
            const auto [p, dp] = legendre_value(m, t);
            const long double dt = p / dp;
            t -= dt;
            if (std::fabs(dt) < 1e-14L) {
                break;
            }
        }
        // t descends in i; map [-1, 1] -> [0, 1] and store ascending.
        roots[m - 1 - i] = static_cast<double>((t + 1.0L) / 2.0L);
    }
    return roots;
}

std::vector<double> chebyshev1_roots(int m) {
    // Roots of T_m; Newton polishing of the closed-form guess converges in
    // one step since the guess is already the root.
    std::vector<double> roots(m);
    for (int j = 1; j <= m; ++j) {
        long double t = std::cos((2.0L * j - 1.0L) *
                                 std::numbers::pi_v<long double> / (2 * m));
        for (int step = 0; step < 100; ++step) {
            const long double theta = std::acos(std::clamp(t, -1.0L, 1.0L));
            const long double p = std::cos(m * theta);
            const long double dp = m * std::sin(m * theta) / std::sin(theta);
            const long double dt = p / dp;
            t -= dt;
            if (std::fabs(dt) < 1e-14L) {
                break;
            }
        }
        roots[m - j] = static_cast<double>(t);
    }
    return roots;
}

} // namespace

std::vector<double> orth_poly_roots(NodeFamily family, int m) {
    if (m < 1) {
        throw std::invalid_argument("orth_poly_roots: m must be >= 1 (got " +
                                    std::to_string(m) + ")");
    }
    switch (family) {
    case NodeFamily::legendre_shifted:
        return legendre_shifted_roots(m);
    case NodeFamily::chebyshev1:
        return chebyshev1_roots(m);
    default:
        throw std::invalid_argument(
            "orth_poly_roots: family must be legendre-shifted or chebyshev1");
    }
}

std::pair<std::vector<long double>, std::vector<long double>>
gauss_legendre_unit(int g) {
    if (g < 1) {
        throw std::invalid_argument(
            "gauss_legendre_unit: g must be >= 1 (got " + std::to_string(g) +
            ")");
    }
    std::vector<long double> nodes(g);
    std::vector<long double> weights(g);
    for (int i = 0; i < g; ++i) {
        long double t = std::cos(std::numbers::pi_v<long double> *
                                 (i + 0.75L) / (g + 0.5L));
        for (int step = 0; step < 100; ++step) {
            const auto [p, dp] = legendre_value(g, t);
            const long double dt = p / dp;
            t -= dt;
            if (std::fabs(dt) < 1e-18L) {
                break;
            }
        }
        const long double dp = legendre_value(g, t).second;
        // On [-1, 1] the weight is 2 / ((1 - t^2) dp^2); mapping to [0, 1]
        // halves it and maps the node through (t + 1) / 2. t descends in i,
        // so store ascending.
        nodes[g - 1 - i] = (t + 1.0L) / 2.0L;
        weights[g - 1 - i] = 1.0L / ((1.0L - t * t) * (dp * dp));
    }
    return {nodes, weights};
}

} // namespace picard
