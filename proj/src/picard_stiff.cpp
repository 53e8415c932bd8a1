#include "picard/picard_stiff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace picard {

std::vector<double> stiff_sigma_nodes(const ReferenceSet& rs) {
    if (!family_includes_endpoints(rs.family)) {
        throw std::invalid_argument(
            "stiff method needs nodes at both interval ends; family " +
            family_name(rs.family) + " does not provide them");
    }
    std::vector<double> sigma(rs.nodes.size());
    const double width = rs.b - rs.a;
    for (std::size_t j = 0; j < rs.nodes.size(); ++j) {
        sigma[j] = (rs.nodes[j] - rs.a) / width;
    }
    return sigma;
}

StiffState stiff_iterate(const ReferenceSet& rs, const OdeProblem& problem,
                         double x_lo, double h, const Vec& u_lo,
                         const StiffState& state, double tau,
                         EvalCounter& counter, int interval) {
    if (static_cast<int>(state.w.size()) != rs.m) {
        throw std::invalid_argument("stiff_iterate: state holds " +
                                    std::to_string(state.w.size()) +
                                    " node values, reference set has m = " +
                                    std::to_string(rs.m));
    }
    const std::vector<double> sigma = stiff_sigma_nodes(rs);
    const double damp = std::exp(-tau);

    std::vector<Vec> F(rs.m);
    for (int j = 0; j < rs.m; ++j) {
        Vec y(problem.dim);
        for (int c = 0; c < problem.dim; ++c) {
            y[c] = u_lo[c] + h * state.w[j][c];
        }
        check_finite(y, problem, interval);
        F[j] = eval_rhs(problem, x_lo + h * sigma[j], y, counter, interval);
    }
    StiffState next;
    next.w.assign(rs.m, Vec(problem.dim, 0.0));
    next.n = state.n + 1;
    for (int k = 0; k < rs.m; ++k) {
        Vec& wk = next.w[k];
        for (int c = 0; c < problem.dim; ++c) {
            wk[c] = damp * state.w[k][c];
        }
        for (int j = 0; j < rs.m; ++j) {
            // rs.W[j][k] equals the integral of the Lagrange basis over
            // [0, sigma_k]: the 1/(b-a)-scaled weights are invariant under
            // the affine map of the nodes onto [0, 1].
            const double w = (1.0 - damp) * rs.W[j][k];
            for (int c = 0; c < problem.dim; ++c) {
                wk[c] += w * F[j][c];
            }
        }
        check_finite(wk, problem, interval);
    }
    return next;
}

StiffStepResult stiff_step(const ReferenceSet& rs, const OdeProblem& problem,
                           double x_lo, double h, const Vec& u_lo,
                           const SolverConfig& cfg, EvalCounter& counter,
                           int interval) {
    if (!(cfg.tau > 0.0)) {
        throw std::invalid_argument("tau must be positive");
    }
    StiffState state;
    state.w.assign(rs.m, Vec(problem.dim, 0.0)); // rest state w^0 = 0
    state.n = 0;
    StiffStepResult result;
    result.hit_cap = false;
    while (true) {
        StiffState next = stiff_iterate(rs, problem, x_lo, h, u_lo, state,
                                        cfg.tau, counter, interval);
        double diff = 0.0;
        for (int j = 0; j < rs.m; ++j) {
            for (int c = 0; c < problem.dim; ++c) {
                diff = std::max(diff, std::fabs(next.w[j][c] - state.w[j][c]));
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
    result.u_next = u_lo;
    for (int c = 0; c < problem.dim; ++c) {
        result.u_next[c] += h * state.w.back()[c];
    }
    result.w = std::move(state.w);
    return result;
}

SolutionTrace solve_stiff(const OdeProblem& problem, const SolverConfig& cfg) {
    if (cfg.method != Method::stiff) {
        throw std::invalid_argument("solve_stiff: config method is not stiff");
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
    if (!family_includes_endpoints(cfg.family)) {
        throw std::invalid_argument(
            "stiff method needs nodes at both interval ends; family " +
            family_name(cfg.family) + " does not provide them");
    }
    const double h = (problem.xf - problem.x0) / cfg.M;

    SolutionTrace trace;
    EvalCounter counter;
    trace.mesh.reserve(cfg.M + 1);
    trace.u.reserve(cfg.M + 1);
    trace.mesh.push_back(problem.x0);
    trace.u.push_back(problem.y0);
    for (int i = 0; i < cfg.M; ++i) {
        const double x_lo = problem.x0 + i * h;
        StiffStepResult step =
            stiff_step(rs, problem, x_lo, h, trace.u.back(), cfg, counter, i);
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
