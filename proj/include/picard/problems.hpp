#pragma once

#include <string>
#include <vector>

#include "picard/ivp.hpp"

namespace picard {

// Catalog of benchmark problems (ex1..ex5, all with exact solutions) and the
// synthetic problems used by property tests (zero-rhs, constant-rhs,
// poly-rhs, linear-decay). Throws std::invalid_argument for unknown names.
OdeProblem get_problem(const std::string& name);

// Same, overriding the end of the integration span (used by ex2/ex3, whose
// benchmark configurations vary x_f).
OdeProblem get_problem(const std::string& name, double xf);

// Names accepted by get_problem, in catalog order.
std::vector<std::string> problem_names();

// y' = 0, y(0) = 1 on [0, 1].
OdeProblem make_zero_rhs();

// y' = c (componentwise constant), y(0) = 0 on [0, 1].
OdeProblem make_constant_rhs(const Vec& c);

// y' = 1 + x + ... + x^degree (depends on x only), y(0) = 1 on [0, 1];
// exact solution by termwise antidifferentiation.
OdeProblem make_poly_rhs(int degree);

// y' = lambda * y, y(0) = 1 on [0, 1].
OdeProblem make_linear_decay(double lambda);

// Solves u - e*sin(u) = x for u by Newton iteration (initial guess u = x,
// tolerance 1e-14, at most 100 steps); used by the ex3 exact solution with
// eccentricity e = 0.6.
double invert_kepler(double x, double eccentricity);

} // namespace picard
