#include "picard/ivp.hpp"

#include <algorithm>
#include <cmath>

namespace picard {

Method parse_method(const std::string& tag) {
    if (tag == "fixed") return Method::fixed;
    if (tag == "variable") return Method::variable;
    if (tag == "stiff") return Method::stiff;
    throw std::invalid_argument("unknown method: " + tag);
}

std::string method_name(Method method) {
    switch (method) {
    case Method::fixed: return "fixed";
    case Method::variable: return "variable";
    case Method::stiff: return "stiff";
    }
    throw std::invalid_argument("unknown method enumerator");
}

EndpointVariant parse_endpoint_variant(const std::string& tag) {
    if (tag == "last-node") return EndpointVariant::last_node;
    if (tag == "end-integral") return EndpointVariant::end_integral;
    throw std::invalid_argument("unknown endpoint_variant: " + tag);
}

std::string endpoint_variant_name(EndpointVariant variant) {
    switch (variant) {
    case EndpointVariant::last_node: return "last-node";
    case EndpointVariant::end_integral: return "end-integral";
    }
    throw std::invalid_argument("unknown endpoint_variant enumerator");
}

double max_error(const SolutionTrace& trace, const OdeProblem& problem) {
    if (!problem.exact) {
        throw std::invalid_argument("max_error: problem '" + problem.name +
                                    "' has no exact solution");
    }
    double err = 0.0;
    for (std::size_t i = 0; i < trace.mesh.size(); ++i) {
        const Vec y = problem.exact(trace.mesh[i]);
        for (int c = 0; c < problem.dim; ++c) {
            err = std::max(err, std::fabs(y[c] - trace.u[i][c]));
        }
    }
    return err;
}

Vec eval_rhs(const OdeProblem& problem, double x, const Vec& y,
             EvalCounter& counter, int interval) {
    Vec f = problem.rhs(x, y);
    counter.tick();
    if (static_cast<int>(f.size()) != problem.dim) {
        throw std::invalid_argument("rhs of '" + problem.name +
                                    "' returned wrong dimension");
    }
    for (double v : f) {
        if (!std::isfinite(v)) {
            throw DivergenceError("solver diverged on interval " +
                                      std::to_string(interval) + " of '" +
                                      problem.name +
                                      "': rhs produced a non-finite value",
                                  interval);
        }
    }
    return f;
}

void check_finite(const Vec& v, const OdeProblem& problem, int interval) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw DivergenceError("solver diverged on interval " +
                                      std::to_string(interval) + " of '" +
                                      problem.name +
                                      "': iterate is no longer finite",
                                  interval);
        }
    }
}

double contraction_factor(const ReferenceSet& rs, double h, double lipschitz, int dim) {
    return h * rs.omega * dim * lipschitz;
}

} // namespace picard
