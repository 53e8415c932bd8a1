#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "picard/ivp.hpp"

namespace picard {

// One experiment: a problem name plus solver configuration. Optional fields
// fall back to method-dependent defaults when resolved (family: equidistant
// for fixed/stiff, legendre-shifted for variable; tau: 10).
struct ExperimentSpec {
    std::string problem;
    Method method = Method::fixed;
    std::optional<NodeFamily> family;
    int m = 3;
    int m_max = 30;
    int M = 1;
    double eps = 1e-6;
    std::optional<double> xf;
    std::optional<double> tau;
    std::optional<EndpointVariant> endpoint_variant;
    int max_iter = 50;
};

struct ExperimentRow {
    ExperimentSpec spec;         // with defaults resolved
    std::optional<double> error; // absent when the problem has no exact solution
    long long nf = 0;
    int iters_min = 0;
    int iters_max = 0;
    double iters_mean = 0.0;
    int warning_count = 0;
};

// Parses a run-configuration stream: blocks of key=value lines separated by
// blank lines, one experiment per block; '#' starts a comment line. Keys:
// problem, method, family, m, m_max, M, eps, xf, tau, endpoint_variant,
// max_iter. Unknown keys or malformed values raise std::invalid_argument
// naming the offender.
std::vector<ExperimentSpec> parse_run_config(std::istream& in);

// Validates the spec, dispatches to the configured solver, and collects the
// error (when an exact solution exists), N_f, and iteration statistics.
// Validation failures raise std::invalid_argument naming the offending key;
// divergence propagates as DivergenceError.
ExperimentRow run_experiment(const ExperimentSpec& spec);

enum class TableFormat { csv, markdown };

TableFormat parse_table_format(const std::string& tag);

// Renders rows with the fixed column order
//   problem, method, family, m, M, eps, xf, tau, error, nf
// (m shows m_max for the variable method; tau is blank for non-stiff rows;
// error is blank without an exact solution). Errors use 6 significant
// digits. Throws std::invalid_argument on empty input.
std::string emit_table(const std::vector<ExperimentRow>& rows, TableFormat format);

// Runs the built-in benchmark replication `which` in 1..5 and renders it in
// the benchmark's paired layout (fixed vs variable, equidistant vs
// chebyshev2) rather than the flat emit_table columns.
std::string emit_builtin_table(int which, TableFormat format);

// Command-line entry point (subcommands: solve, bench, weights, tables).
// Returns 0 on success, 2 on validation errors, 3 on solver divergence.
// Diagnostics go to `err`, data to `out`.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// cli_run on argv with std::cout/std::cerr.
int cli_main(int argc, char** argv);

} // namespace picard
