#pragma once

#include "picard/ivp.hpp"
#include "picard/reference_set.hpp"

namespace picard {

// Node values w^n_j of the rescaled unknown (y(x_lo + h*sigma) = u_lo +
// h*w(sigma)) in the stabilization-principle iteration.
struct StiffState {
    std::vector<Vec> w; // m vectors at the normalized nodes sigma_1..sigma_m
    int n = 0;          // iteration index
};

// Normalized nodes sigma_j = (xi_j - a)/(b - a) in [0, 1]. The stiff method
// needs sigma_1 = 0 and sigma_m = 1, so only families that include the
// interval endpoints are admissible.
std::vector<double> stiff_sigma_nodes(const ReferenceSet& rs);

// One step of the exponentially damped iteration
//   w^{n+1}_k = e^{-tau} w^n_k
//             + (1 - e^{-tau}) sum_j f(x_lo + h*sigma_j, u_lo + h*w^n_j) * W[j][k].
// The reference-set weights W[j][k] equal the needed integrals
// integral_0^{sigma_k} l_j(sigma) dsigma because they are invariant under the
// affine change of variable to [0, 1]. m evaluations are counted, shared
// across k.
StiffState stiff_iterate(const ReferenceSet& rs, const OdeProblem& problem,
                         double x_lo, double h, const Vec& u_lo,
                         const StiffState& state, double tau,
                         EvalCounter& counter, int interval = 0);

struct StiffStepResult {
    Vec u_next;
    int iters;
    std::vector<Vec> w;   // final node values of the rescaled unknown
    bool hit_cap = false; // max_iter reached before the tolerance
};

// Iterates stiff_iterate from w^0 = 0 until max_j ||w^{n+1}_j - w^n_j|| <
// cfg.eps (at least one iteration) or cfg.max_iter, then advances with
// u_next = u_lo + h * w_m.
StiffStepResult stiff_step(const ReferenceSet& rs, const OdeProblem& problem,
                           double x_lo, double h, const Vec& u_lo,
                           const SolverConfig& cfg, EvalCounter& counter,
                           int interval = 0);

// Marches the uniform mesh with stiff_step; cfg.method must be stiff and
// cfg.family must include the interval endpoints (equidistant, chebyshev2).
SolutionTrace solve_stiff(const OdeProblem& problem, const SolverConfig& cfg);

} // namespace picard
