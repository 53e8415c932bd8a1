#pragma once

#include "picard/ivp.hpp"

namespace picard {

// Quadrature data lifting level-m node values to level m+1 for the growing
// reference-set method. W holds raw basis integrals on [a, b]:
//
//   W[k][j]   = integral_a^{target_nodes[k]} l^m_j(xi) dxi   (k = 0..m)
//   W[m+1][j] = integral_a^b l^m_j(xi) dxi
//
// scaled by h/(b-a) at the use site, so one transfer serves every mesh
// interval.
struct LevelTransfer {
    NodeFamily family;
    int m; // source level
    double a;
    double b;
    std::vector<double> source_nodes; // m roots (level m)
    std::vector<double> target_nodes; // m+1 roots (level m+1)
    std::vector<std::vector<double>> W; // (m+2) x m
};

// Builds (or returns the cached) transfer for (family, m). Families are
// limited to the orthogonal-root sets (legendre_shifted, chebyshev1), whose
// weight functions satisfy the integrability requirements of the method's
// convergence theory. Throws std::invalid_argument for other families or
// m < 1.
const LevelTransfer& build_transfer(NodeFamily family, int m);

struct VariableStepResult {
    Vec u_next;
    int final_m;                // level at which the growth stopped
    std::vector<Vec> endpoints; // endpoint approximation after each level
    bool hit_cap = false;       // m_max reached before the tolerance
};

// Grows m = 1, 2, ... from u^1_{i,1} = u_i and endpoint u^1_{i+1} = u_i:
// each level evaluates F at the m current nodes (m counted calls) and applies
// the transfer to produce the m+1 node values and the endpoint u^{m+1}_{i+1}.
// Growth stops once the endpoint difference ||u^{m+1}_{i+1} - u^m_{i+1}||
// has been below cfg.eps on two consecutive levels (a single sub-tolerance
// difference routinely appears one level before the quadrature order has
// stabilized), or at cfg.m_max with a cap flag.
VariableStepResult variable_step(const OdeProblem& problem, double x_i, double h,
                                 const Vec& u_i, const SolverConfig& cfg,
                                 EvalCounter& counter, int interval = 0);

// Marches the uniform mesh with variable_step; records the final level of
// each interval in SolutionTrace::iters. cfg.method must be variable.
SolutionTrace solve_variable(const OdeProblem& problem, const SolverConfig& cfg);

} // namespace picard
