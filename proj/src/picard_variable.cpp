#include "picard/picard_variable.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "picard/poly.hpp"

namespace picard {

namespace {

LevelTransfer build_transfer_uncached(NodeFamily family, int m) {
    if (family != NodeFamily::legendre_shifted && family != NodeFamily::chebyshev1) {
        throw std::invalid_argument(
            "build_transfer: family must be legendre-shifted or chebyshev1, got " +
            family_name(family));
    }
    if (m < 1) {
        throw std::invalid_argument("build_transfer: m must be >= 1 (got " +
                                    std::to_string(m) + ")");
    }
    LevelTransfer tr;
    tr.family = family;
    tr.m = m;
    std::tie(tr.a, tr.b) = family_interval(family);
    tr.source_nodes = orth_poly_roots(family, m);
    tr.target_nodes = orth_poly_roots(family, m + 1);

    // Integrate each cardinal function in product form under a Gauss rule that
    // is exact for its degree. Expanding the cardinals into monomial
    // coefficients loses roughly a factor 4^m of accuracy to cancellation,
    // which at the deep levels this solver reaches (m in the high teens)
    // leaves more noise in the weights than the tolerances being resolved.
    const std::vector<double>& src = tr.source_nodes;
    const auto cardinal = [&src, m](int j, long double x) {
        long double num = 1.0L;
        long double den = 1.0L;
        const long double sj = static_cast<long double>(src[j]);
        for (int k = 0; k < m; ++k) {
            if (k == j) {
                continue;
            }
            const long double sk = static_cast<long double>(src[k]);
            num *= x - sk;
            den *= sj - sk;
        }
        return num / den;
    };
    const auto [qn, qw] = gauss_legendre_unit((m + 1) / 2 + 1);
    const long double a = static_cast<long double>(tr.a);
    const auto integral_to = [&](int j, long double t) {
        const long double len = t - a;
        long double sum = 0.0L;
        for (std::size_t q = 0; q < qn.size(); ++q) {
            sum += qw[q] * cardinal(j, a + len * qn[q]);
        }
        return len * sum;
    };
    tr.W.assign(m + 2, std::vector<double>(m, 0.0));
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k <= m; ++k) {
            tr.W[k][j] = static_cast<double>(
                integral_to(j, static_cast<long double>(tr.target_nodes[k])));
        }
        tr.W[m + 1][j] = static_cast<double>(
            integral_to(j, static_cast<long double>(tr.b)));
    }
    return tr;
}

} // namespace

const LevelTransfer& build_transfer(NodeFamily family, int m) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<const LevelTransfer>> cache;

    const auto key = std::make_pair(static_cast<int>(family), m);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<const LevelTransfer>(
                                    build_transfer_uncached(family, m)))
                 .first;
    }
    return *it->second;
}

VariableStepResult variable_step(const OdeProblem& problem, double x_i, double h,
                                 const Vec& u_i, const SolverConfig& cfg,
                                 EvalCounter& counter, int interval) {
    if (cfg.m_max < 2) {
        throw std::invalid_argument("m_max must be >= 2 (got " +
                                    std::to_string(cfg.m_max) + ")");
    }
    VariableStepResult result;
    result.hit_cap = false;

    std::vector<Vec> vals{u_i}; // u^m_{i,j}, starting from u^1_{i,1} = u_i
    Vec ep_prev = u_i;          // u^m_{i+1},  starting from u^1_{i+1} = u_i
    double diff_prev = std::numeric_limits<double>::infinity();
    int m = 1;
    while (true) {
        const LevelTransfer& tr = build_transfer(cfg.family, m);
        const double width = tr.b - tr.a;
        const double scale = h / width;

        std::vector<Vec> F(m);
        for (int j = 0; j < m; ++j) {
            const double xj = x_i + h * (tr.source_nodes[j] - tr.a) / width;
            F[j] = eval_rhs(problem, xj, vals[j], counter, interval);
        }
        std::vector<Vec> new_vals(m + 1, u_i);
        for (int k = 0; k <= m; ++k) {
            for (int j = 0; j < m; ++j) {
                const double w = scale * tr.W[k][j];
                for (int c = 0; c < problem.dim; ++c) {
                    new_vals[k][c] += w * F[j][c];
                }
            }
            check_finite(new_vals[k], problem, interval);
        }
        Vec ep_new = u_i;
        for (int j = 0; j < m; ++j) {
            const double w = scale * tr.W[m + 1][j];
            for (int c = 0; c < problem.dim; ++c) {
                ep_new[c] += w * F[j][c];
            }
        }
        check_finite(ep_new, problem, interval);

        double diff = 0.0;
        for (int c = 0; c < problem.dim; ++c) {
            diff = std::max(diff, std::fabs(ep_new[c] - ep_prev[c]));
        }
        result.endpoints.push_back(ep_new);
        if (m >= 2 && diff < cfg.eps && diff_prev < cfg.eps) {
            result.u_next = std::move(ep_new);
            result.final_m = m;
            return result;
        }
        if (m + 1 >= cfg.m_max) {
            result.u_next = std::move(ep_new);
            result.final_m = m;
            result.hit_cap = true;
            return result;
        }
        vals = std::move(new_vals);
        ep_prev = std::move(ep_new);
        diff_prev = diff;
        ++m;
    }
}

SolutionTrace solve_variable(const OdeProblem& problem, const SolverConfig& cfg) {
    if (cfg.method != Method::variable) {
        throw std::invalid_argument("solve_variable: config method is not variable");
    }
    if (cfg.M < 1) {
        throw std::invalid_argument("M must be >= 1 (got " +
                                    std::to_string(cfg.M) + ")");
    }
    if (!(cfg.eps > 0.0)) {
        throw std::invalid_argument("eps must be positive");
    }
    const double h = (problem.xf - problem.x0) / cfg.M;

    SolutionTrace trace;
    EvalCounter counter;
    trace.mesh.reserve(cfg.M + 1);
    trace.u.reserve(cfg.M + 1);
    trace.mesh.push_back(problem.x0);
    trace.u.push_back(problem.y0);
    for (int i = 0; i < cfg.M; ++i) {
        const double x_i = problem.x0 + i * h;
        VariableStepResult step =
            variable_step(problem, x_i, h, trace.u.back(), cfg, counter, i);
        if (step.hit_cap) {
            trace.warnings.push_back("interval " + std::to_string(i) +
                                     ": growth cap m_max=" +
                                     std::to_string(cfg.m_max) +
                                     " reached before the tolerance");
        }
        trace.iters.push_back(step.final_m);
        trace.mesh.push_back(problem.x0 + (i + 1) * h);
        trace.u.push_back(std::move(step.u_next));
    }
    trace.nf = counter.count();
    return trace;
}

} // namespace picard
