#pragma once

#include "picard/ivp.hpp"
#include "picard/reference_set.hpp"

namespace picard {

// Stage values u^{(n)}_{i,1..m} of the fixed-reference-set iteration on one
// mesh interval.
struct FixedStepState {
    std::vector<Vec> stages; // m vectors, stages[j] at node xi_{j+1}
    int n = 0;               // iteration index
};

// Initial state u^{(0)}_{i,j} = u_i for all j.
FixedStepState make_fixed_initial_state(const ReferenceSet& rs, const Vec& u_i);

// One sweep of successive approximation:
//   u^{(n+1)}_{i,k} = u_i + h * sum_j W[j][k] * f(x_{i,j}, u^{(n)}_{i,j}).
// The m evaluations f(x_{i,j}, u^{(n)}_{i,j}) are computed once and shared
// across all k (the matrix-product form); exactly m calls are counted.
FixedStepState fixed_iterate(const ReferenceSet& rs, const OdeProblem& problem,
                             double x_i, double h, const Vec& u_i,
                             const FixedStepState& state, EvalCounter& counter,
                             int interval = 0);

struct FixedStepResult {
    Vec u_next;
    int iters;               // sweeps performed
    std::vector<Vec> stages; // converged stage values
    bool hit_cap = false;    // max_iter reached before the tolerance
};

// Resolved endpoint variant: the configured one if present (last_node is
// rejected for families without xi_m = b), otherwise last_node when the
// family includes the endpoints and end_integral when it does not.
EndpointVariant resolve_endpoint_variant(const SolverConfig& cfg);

// Iterates fixed_iterate from the cold-start state until the max-over-stages
// max-norm difference between sweeps drops below cfg.eps (at least one sweep
// is always performed) or cfg.max_iter sweeps elapse. Advances by the last
// stage (last_node) or by the end weights with m fresh counted evaluations
// (end_integral).
FixedStepResult fixed_step(const ReferenceSet& rs, const OdeProblem& problem,
                           double x_i, double h, const Vec& u_i,
                           const SolverConfig& cfg, EvalCounter& counter,
                           int interval = 0);

// Marches the uniform mesh with fixed_step; cfg.method must be fixed.
SolutionTrace solve_fixed(const OdeProblem& problem, const SolverConfig& cfg);

} // namespace picard
