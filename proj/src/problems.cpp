#include "picard/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace picard {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

OdeProblem make_ex1() {
    OdeProblem p;
    p.name = "ex1";
    p.dim = 1;
    p.rhs = [](double x, const Vec& y) -> Vec {
        if (x < 0.0) {
            // The denominator vanishes at x = -1; the benchmark lives on
            // [0, 1], where it is bounded away from zero.
            throw std::domain_error("ex1 rhs requires x >= 0");
        }
        const double t = x + 2.0;
        const double t4 = t * t * t * t;
        return {y[0] * (4.0 * t * t * t - y[0]) / (t4 - 1.0)};
    };
    p.y0 = {15.0};
    p.x0 = 0.0;
    p.xf = 1.0;
    p.exact = [](double x) -> Vec {
        const double t = x + 2.0;
        return {1.0 + t + t * t + t * t * t};
    };
    return p;
}

Vec orbit_rhs(const Vec& y) {
    const double r = std::sqrt(y[0] * y[0] + y[2] * y[2]);
    const double r3 = r * r * r;
    return {y[1], -y[0] / r3, y[3], -y[2] / r3};
}

OdeProblem make_ex2(double xf) {
    OdeProblem p;
    p.name = "ex2";
    p.dim = 4;
    p.rhs = [](double, const Vec& y) { return orbit_rhs(y); };
    p.y0 = {1.0, 0.0, 0.0, 1.0};
    p.x0 = 0.0;
    p.xf = xf;
    p.exact = [](double x) -> Vec {
        return {std::cos(x), -std::sin(x), std::sin(x), std::cos(x)};
    };
    return p;
}

OdeProblem make_ex3(double xf) {
    OdeProblem p;
    p.name = "ex3";
    p.dim = 4;
    p.rhs = [](double, const Vec& y) { return orbit_rhs(y); };
    p.y0 = {0.4, 0.0, 0.0, 2.0};
    p.x0 = 0.0;
    p.xf = xf;
    p.exact = [](double x) -> Vec {
        const double u = invert_kepler(x, 0.6);
        const double d = 1.0 - 0.6 * std::cos(u);
        return {std::cos(u) - 0.6, -std::sin(u) / d, 0.8 * std::sin(u),
                0.8 * std::cos(u) / d};
    };
    return p;
}

OdeProblem make_ex4() {
    OdeProblem p;
    p.name = "ex4";
    p.dim = 2;
    p.rhs = [](double, const Vec& y) -> Vec {
        return {998.0 * y[0] + 1998.0 * y[1], -999.0 * y[0] - 1999.0 * y[1]};
    };
    p.y0 = {1.0, 0.0};
    p.x0 = 0.0;
    p.xf = 1.0;
    p.exact = [](double x) -> Vec {
        const double slow = std::exp(-x);
        const double fast = std::exp(-1000.0 * x);
        return {2.0 * slow - fast, -slow + fast};
    };
    return p;
}

OdeProblem make_ex5() {
    OdeProblem p;
    p.name = "ex5";
    p.dim = 1;
    p.rhs = [](double, const Vec& y) -> Vec { return {-20.0 * y[0]}; };
    p.y0 = {1.0};
    p.x0 = 0.0;
    p.xf = 1.0;
    p.exact = [](double x) -> Vec { return {std::exp(-20.0 * x)}; };
    return p;
}

} // namespace

double invert_kepler(double x, double eccentricity) {
    double u = x;
    for (int step = 0; step < 100; ++step) {
        const double du = (u - eccentricity * std::sin(u) - x) /
                          (1.0 - eccentricity * std::cos(u));
        u -= du;
        if (std::fabs(du) < 1e-14) {
            break;
        }
    }
    return u;
}

OdeProblem make_zero_rhs() {
    OdeProblem p;
    p.name = "zero-rhs";
    p.dim = 1;
    p.rhs = [](double, const Vec&) -> Vec { return {0.0}; };
    p.y0 = {1.0};
    p.x0 = 0.0;
    p.xf = 1.0;
    p.exact = [](double) -> Vec { return {1.0}; };
    return p;
}

OdeProblem make_constant_rhs(const Vec& c) {
    OdeProblem p;
    p.name = "constant-rhs";
    p.dim = static_cast<int>(c.size());
    p.rhs = [c](double, const Vec&) { return c; };
    p.y0.assign(c.size(), 0.0);
    p.x0 = 0.0;
    p.xf = 1.0;
    p.exact = [c](double x) {
        Vec y(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            y[i] = c[i] * x;
        }
        return y;
    };
    return p;
}

OdeProblem make_poly_rhs(int degree) {
    if (degree < 0) {
        throw std::invalid_argument("poly-rhs degree must be >= 0");
    }
    OdeProblem p;
    p.name = "poly-rhs";
    p.dim = 1;
    p.rhs = [degree](double x, const Vec&) -> Vec {
        double sum = 0.0;
        double term = 1.0;
        for (int d = 0; d <= degree; ++d) {
            sum += term;
            term *= x;
        }
        return {sum};
    };
    p.y0 = {1.0};
    p.x0 = 0.0;
    p.xf = 1.0;
    p.exact = [degree](double x) -> Vec {
        double sum = 1.0;
        double term = x;
        for (int d = 0; d <= degree; ++d) {
            sum += term / (d + 1);
            term *= x;
        }
        return {sum};
    };
    return p;
}

OdeProblem make_linear_decay(double lambda) {
    OdeProblem p;
    p.name = "linear-decay";
    p.dim = 1;
    p.rhs = [lambda](double, const Vec& y) -> Vec { return {lambda * y[0]}; };
    p.y0 = {1.0};
    p.x0 = 0.0;
    p.xf = 1.0;
    p.exact = [lambda](double x) -> Vec { return {std::exp(lambda * x)}; };
    return p;
}

OdeProblem get_problem(const std::string& name) {
    if (name == "ex1") return make_ex1();
    if (name == "ex2") return make_ex2(two_pi);
    if (name == "ex3") return make_ex3(two_pi);
    if (name == "ex4") return make_ex4();
    if (name == "ex5") return make_ex5();
    if (name == "zero-rhs") return make_zero_rhs();
    if (name == "constant-rhs") return make_constant_rhs({1.5});
    if (name == "poly-rhs") return make_poly_rhs(2);
    if (name == "linear-decay") return make_linear_decay(-1.0);
    throw std::invalid_argument("unknown problem: " + name);
}

OdeProblem get_problem(const std::string& name, double xf) {
    OdeProblem p = get_problem(name);
    if (!(xf > p.x0)) {
        throw std::invalid_argument("xf must exceed the initial point x0");
    }
    p.xf = xf;
    return p;
}

std::vector<std::string> problem_names() {
    return {"ex1", "ex2", "ex3", "ex4", "ex5",
            "zero-rhs", "constant-rhs", "poly-rhs", "linear-decay"};
}

} // namespace picard
