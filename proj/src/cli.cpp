#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "picard/harness.hpp"
#include "picard/reference_set.hpp"

namespace picard {

namespace {

std::string fmt17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void print_weights(const ReferenceSet& rs, std::ostream& out) {
    out << "family: " << family_name(rs.family) << '\n';
    out << "m: " << rs.m << '\n';
    out << "interval: [" << fmt17(rs.a) << ", " << fmt17(rs.b) << "]\n";
    out << "nodes:";
    for (double node : rs.nodes) {
        out << ' ' << fmt17(node);
    }
    out << '\n';
    out << "W (row k = node, column j = basis):\n";
    for (int k = 0; k < rs.m; ++k) {
        for (int j = 0; j < rs.m; ++j) {
            out << (j ? " " : "") << fmt17(rs.W[j][k]);
        }
        out << '\n';
    }
    out << "end-weights:";
    for (double w : rs.end_weights) {
        out << ' ' << fmt17(w);
    }
    out << '\n';
    out << "omega: " << fmt17(rs.omega) << '\n';
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Picard-iteration solvers for ODE initial value problems"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Run one experiment from flags");
    ExperimentSpec spec;
    std::string method_tag = "fixed";
    std::string family_tag;
    std::string endpoint_tag;
    std::string solve_format = "markdown";
    double xf_value = 0.0;
    double tau_value = 0.0;
    solve->add_option("--problem", spec.problem, "Problem name (see catalog)")
        ->required();
    solve->add_option("--method", method_tag, "fixed | variable | stiff");
    solve->add_option("--family", family_tag,
                      "equidistant | chebyshev2 | chebyshev1 | legendre-shifted");
    solve->add_option("--m", spec.m, "Node count (fixed, stiff)");
    solve->add_option("--m-max", spec.m_max, "Growth cap (variable)");
    solve->add_option("--M", spec.M, "Mesh intervals");
    solve->add_option("--eps", spec.eps, "Stopping tolerance");
    auto* xf_opt = solve->add_option("--xf", xf_value, "End of the span");
    auto* tau_opt = solve->add_option("--tau", tau_value, "Damping parameter (stiff)");
    solve->add_option("--endpoint-variant", endpoint_tag,
                      "last-node | end-integral (fixed)");
    solve->add_option("--max-iter", spec.max_iter, "Per-interval iteration cap");
    solve->add_option("--format", solve_format, "markdown | csv");

    // bench
    auto* bench = app.add_subcommand("bench", "Run experiments from a config file");
    std::string config_path;
    std::string bench_format = "markdown";
    std::string output_path;
    bench->add_option("--config", config_path, "Run configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    bench->add_option("--format", bench_format, "markdown | csv");
    bench->add_option("-o,--output", output_path, "Write the table to a file");

    // weights
    auto* weights = app.add_subcommand("weights", "Print reference-set weights");
    std::string weights_family;
    int weights_m = 0;
    weights->add_option("--family", weights_family, "Node family")->required();
    weights->add_option("--m", weights_m, "Node count")->required();

    // tables
    auto* tables = app.add_subcommand("tables", "Replicate a built-in benchmark table");
    int which = 0;
    std::string tables_format = "markdown";
    tables->add_option("--which", which, "Table number (1-5)")->required();
    tables->add_option("--format", tables_format, "markdown | csv");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("picard_ivp");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const auto& arg : argv_storage) {
        argv.push_back(arg.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            spec.method = parse_method(method_tag);
            if (!family_tag.empty()) {
                spec.family = parse_family(family_tag);
            }
            if (!endpoint_tag.empty()) {
                spec.endpoint_variant = parse_endpoint_variant(endpoint_tag);
            }
            if (xf_opt->count() > 0) {
                spec.xf = xf_value;
            }
            if (tau_opt->count() > 0) {
                spec.tau = tau_value;
            }
            ExperimentRow row = run_experiment(spec);
            if (row.warning_count > 0) {
                err << "note: solve finished with " << row.warning_count
                    << " warning(s)\n";
            }
            out << emit_table({row}, parse_table_format(solve_format));
        } else if (bench->parsed()) {
            std::ifstream in(config_path);
            if (!in) {
                err << "error: cannot open config file '" << config_path << "'\n";
                return 2;
            }
            const std::vector<ExperimentSpec> specs = parse_run_config(in);
            if (specs.empty()) {
                err << "error: config file '" << config_path
                    << "' defines no experiments\n";
                return 2;
            }
            std::vector<ExperimentRow> rows;
            rows.reserve(specs.size());
            for (std::size_t i = 0; i < specs.size(); ++i) {
                ExperimentRow row = run_experiment(specs[i]);
                if (row.warning_count > 0) {
                    err << "note: experiment " << i + 1 << " finished with "
                        << row.warning_count << " warning(s)\n";
                }
                rows.push_back(std::move(row));
            }
            const std::string table =
                emit_table(rows, parse_table_format(bench_format));
            if (output_path.empty()) {
                out << table;
            } else {
                std::ofstream file(output_path);
                if (!file) {
                    err << "error: cannot write to '" << output_path << "'\n";
                    return 2;
                }
                file << table;
            }
        } else if (weights->parsed()) {
            const ReferenceSet& rs =
                build_reference_set(parse_family(weights_family), weights_m);
            print_weights(rs, out);
        } else if (tables->parsed()) {
            out << emit_builtin_table(which, parse_table_format(tables_format));
        }
    } catch (const DivergenceError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return cli_run(args, std::cout, std::cerr);
}

} // namespace picard
