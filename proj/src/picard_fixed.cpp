#include "picard/picard_fixed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace picard {

FixedStepState make_fixed_initial_state(const ReferenceSet& rs, const Vec& u_i) {
    FixedStepState state;
    state.stages.assign(rs.m, u_i);
    state.n = 0;
    return state;
}

FixedStepState fixed_iterate(const ReferenceSet& rs, const OdeProblem& problem,
                             double x_i, double h, const Vec& u_i,
                             const FixedStepState& state, EvalCounter& counter,
                             int interval) {
    if (static_cast<int>(state.stages.size()) != rs.m) {
        throw std::invalid_argument("fixed_iterate: state holds " +
                                    std::to_string(state.stages.size()) +
                                    " stages, reference set has m = " +
                                    std::to_string(rs.m));
    }
    const std::vector<double> xs = map_to_interval(rs, x_i, h);
    std::vector<Vec> F(rs.m);
    for (int j = 0; j < rs.m; ++j) {
        F[j] = eval_rhs(problem, xs[j], state.stages[j], counter, interval);
    }
    FixedStepState next;
    next.stages.assign(rs.m, u_i);
    next.n = state.n + 1;
    for (int k = 0; k < rs.m; ++k) {
        Vec& stage = next.stages[k];
        for (int j = 0; j < rs.m; ++j) {
            const double w = h * rs.W[j][k];
            for (int c = 0; c < problem.dim; ++c) {
                stage[c] += w * F[j][c];
            }
        }
        check_finite(stage, problem, interval);
    }
    return next;
}

EndpointVariant resolve_endpoint_variant(const SolverConfig& cfg) {
    if (cfg.endpoint_variant) {
        if (*cfg.endpoint_variant == EndpointVariant::last_node &&
            !family_includes_endpoints(cfg.family)) {
            throw std::invalid_argument(
                "endpoint_variant last-node needs the last node at the interval "
                "end; family " +
                family_name(cfg.family) + " does not place one there");
        }
        return *cfg.endpoint_variant;
    }
    return family_includes_endpoints(cfg.family) ? EndpointVariant::last_node
                                                 : EndpointVariant::end_integral;
}

FixedStepResult fixed_step(const ReferenceSet& rs, const OdeProblem& problem,
                           double x_i, double h, const Vec& u_i,
                           const SolverConfig& cfg, EvalCounter& counter,
                           int interval) {
    const EndpointVariant variant = resolve_endpoint_variant(cfg);
    FixedStepState state = make_fixed_initial_state(rs, u_i);
    FixedStepResult result;
    result.hit_cap = false;
    while (true) {
        FixedStepState next = fixed_iterate(rs, problem, x_i, h, u_i, state,
                                            counter, interval);
        double diff = 0.0;
        for (int j = 0; j < rs.m; ++j) {
            for (int c = 0; c < problem.dim; ++c) {
                diff = std::max(diff,
                                std::fabs(next.stages[j][c] - state.stages[j][c]));
            }
        }
        state = std::move(next);
        if (diff < cfg.eps) {
            break;
        }
        if (state.n >= cfg.max_iter) {
            result.hit_cap = true;
            break;
        }
    }
    result.iters = state.n;
    result.stages = state.stages;
    if (variant == EndpointVariant::last_node) {
        result.u_next = state.stages.back();
    } else {
        // Fresh evaluations: the stages moved during the final sweep.
        const std::vector<double> xs = map_to_interval(rs, x_i, h);
        result.u_next = u_i;
        for (int j = 0; j < rs.m; ++j) {
            const Vec f = eval_rhs(problem, xs[j], state.stages[j], counter, interval);
            for (int c = 0; c < problem.dim; ++c) {
                result.u_next[c] += h * rs.end_weights[j] * f[c];
            }
        }
        check_finite(result.u_next, problem, interval);
    }
    return result;
}

SolutionTrace solve_fixed(const OdeProblem& problem, const SolverConfig& cfg) {
    if (cfg.method != Method::fixed) {
        throw std::invalid_argument("solve_fixed: config method is not fixed");
    }
    if (cfg.M < 1) {
        throw std::invalid_argument("M must be >= 1 (got " +
                                    std::to_string(cfg.M) + ")");
    }
    if (!(cfg.eps > 0.0)) {
        throw std::invalid_argument("eps must be positive");
    }
    if (cfg.max_iter < 1) {
        throw std::invalid_argument("max_iter must be >= 1");
    }
    const ReferenceSet& rs = build_reference_set(cfg.family, cfg.m);
    const double h = (problem.xf - problem.x0) / cfg.M;

    SolutionTrace trace;
    EvalCounter counter;
    trace.mesh.reserve(cfg.M + 1);
    trace.u.reserve(cfg.M + 1);
    trace.mesh.push_back(problem.x0);
    trace.u.push_back(problem.y0);
    for (int i = 0; i < cfg.M; ++i) {
        const double x_i = problem.x0 + i * h;
        FixedStepResult step =
            fixed_step(rs, problem, x_i, h, trace.u.back(), cfg, counter, i);
        if (step.hit_cap) {
            trace.warnings.push_back("interval " + std::to_string(i) +
                                     ": iteration cap max_iter=" +
                                     std::to_string(cfg.max_iter) +
                                     " reached before the tolerance");
        }
        trace.iters.push_back(step.iters);
        trace.mesh.push_back(problem.x0 + (i + 1) * h);
        trace.u.push_back(std::move(step.u_next));
    }
    trace.nf = counter.count();
    return trace;
}

} // namespace picard
