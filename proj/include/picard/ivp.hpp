#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "picard/node_family.hpp"
#include "picard/reference_set.hpp"

namespace picard {

using Vec = std::vector<double>;
using RhsFn = std::function<Vec(double, const Vec&)>;
using ExactFn = std::function<Vec(double)>;

// Initial value problem y' = f(x, y), y(x0) = y0 on [x0, xf].
struct OdeProblem {
    std::string name;
    int dim = 1;
    RhsFn rhs;
    Vec y0;
    double x0 = 0.0;
    double xf = 1.0;
    ExactFn exact; // may be empty
};

// Counts full vector evaluations of the right-hand side (the N_f work
// metric). Every call is counted, including evaluations at nodes whose
// weight column is zero; the count never resets within a solve.
class EvalCounter {
public:
    void tick() { ++count_; }
    long long count() const { return count_; }

private:
    long long count_ = 0;
};

enum class Method { fixed, variable, stiff };

enum class EndpointVariant {
    last_node,    // advance with the stage at xi_m; requires xi_m = b
    end_integral, // advance with the end weights; costs m extra evaluations
};

Method parse_method(const std::string& tag);
std::string method_name(Method method);
EndpointVariant parse_endpoint_variant(const std::string& tag);
std::string endpoint_variant_name(EndpointVariant variant);

struct SolverConfig {
    Method method = Method::fixed;
    NodeFamily family = NodeFamily::equidistant;
    int m = 3;        // node count (fixed, stiff)
    int m_max = 30;   // growth cap (variable)
    int M = 1;        // mesh intervals
    double eps = 1e-6;
    int max_iter = 50;
    double tau = 10.0; // stiff damping parameter
    std::optional<EndpointVariant> endpoint_variant; // fixed; default by family
};

// Uniform mesh x_i = x0 + i*h, the approximations u_i, per-interval iteration
// counts (final reference-set size for the variable method), the total
// evaluation count, and any warnings (iteration-cap or growth-cap hits).
struct SolutionTrace {
    std::vector<double> mesh;
    std::vector<Vec> u;
    std::vector<int> iters;
    long long nf = 0;
    std::vector<std::string> warnings;
};

// Raised when an iterate stops being finite; the message names the interval.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, int interval)
        : std::runtime_error(what), interval_(interval) {}
    int interval() const { return interval_; }

private:
    int interval_;
};

// max over mesh points of the componentwise max-norm error against
// problem.exact. Throws std::invalid_argument when exact is absent.
double max_error(const SolutionTrace& trace, const OdeProblem& problem);

// Evaluates problem.rhs, counts the call, and verifies the result is finite
// and of the declared dimension; non-finite output raises DivergenceError
// naming `interval`.
Vec eval_rhs(const OdeProblem& problem, double x, const Vec& y,
             EvalCounter& counter, int interval);

// Raises DivergenceError naming `interval` when v has a non-finite entry.
void check_finite(const Vec& v, const OdeProblem& problem, int interval);

// Diagnostic h * omega * dim * L for a caller-supplied Lipschitz estimate L;
// values below 1 satisfy the contraction condition of the convergence
// theorem, so the per-interval iteration is a contraction.
double contraction_factor(const ReferenceSet& rs, double h, double lipschitz, int dim);

} // namespace picard
