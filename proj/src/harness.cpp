#include "picard/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "picard/picard_fixed.hpp"
#include "picard/picard_stiff.hpp"
#include "picard/picard_variable.hpp"
#include "picard/problems.hpp"

namespace picard {

namespace {

std::string fmt(double value, const char* spec = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, value);
    return buf;
}

std::string fmt_ll(long long value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", value);
    return buf;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("key '" + key + "': cannot parse number '" +
                                    value + "'");
    }
    if (used != value.size()) {
        throw std::invalid_argument("key '" + key + "': cannot parse number '" +
                                    value + "'");
    }
    return out;
}

int parse_int(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    int out = 0;
    try {
        out = std::stoi(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("key '" + key + "': cannot parse integer '" +
                                    value + "'");
    }
    if (used != value.size()) {
        throw std::invalid_argument("key '" + key + "': cannot parse integer '" +
                                    value + "'");
    }
    return out;
}

void apply_key(ExperimentSpec& spec, const std::string& key,
               const std::string& value) {
    if (key == "problem") {
        spec.problem = value;
    } else if (key == "method") {
        spec.method = parse_method(value);
    } else if (key == "family") {
        spec.family = parse_family(value);
    } else if (key == "m") {
        spec.m = parse_int(key, value);
    } else if (key == "m_max") {
        spec.m_max = parse_int(key, value);
    } else if (key == "M") {
        spec.M = parse_int(key, value);
    } else if (key == "eps") {
        spec.eps = parse_double(key, value);
    } else if (key == "xf") {
        spec.xf = parse_double(key, value);
    } else if (key == "tau") {
        spec.tau = parse_double(key, value);
    } else if (key == "endpoint_variant") {
        spec.endpoint_variant = parse_endpoint_variant(value);
    } else if (key == "max_iter") {
        spec.max_iter = parse_int(key, value);
    } else {
        throw std::invalid_argument("unknown key '" + key + "'");
    }
}

struct ResolvedExperiment {
    ExperimentSpec spec; // defaults filled in
    OdeProblem problem;
    SolverConfig cfg;
};

ResolvedExperiment resolve_spec(const ExperimentSpec& raw) {
    ResolvedExperiment rx;
    rx.spec = raw;
    if (raw.problem.empty()) {
        throw std::invalid_argument("key 'problem' is required");
    }
    if (raw.M < 1) {
        throw std::invalid_argument("key 'M' must be >= 1 (got " +
                                    std::to_string(raw.M) + ")");
    }
    if (!(raw.eps > 0.0)) {
        throw std::invalid_argument("key 'eps' must be positive");
    }
    if (raw.max_iter < 1) {
        throw std::invalid_argument("key 'max_iter' must be >= 1");
    }
    if (raw.method == Method::variable) {
        if (raw.m_max < 2) {
            throw std::invalid_argument("key 'm_max' must be >= 2 (got " +
                                        std::to_string(raw.m_max) + ")");
        }
    } else {
        if (raw.m < 1) {
            throw std::invalid_argument("key 'm' must be >= 1 (got " +
                                        std::to_string(raw.m) + ")");
        }
    }
    if (raw.tau && raw.method != Method::stiff) {
        throw std::invalid_argument("key 'tau' applies to the stiff method only");
    }
    if (raw.tau && !(*raw.tau > 0.0)) {
        throw std::invalid_argument("key 'tau' must be positive");
    }
    if (raw.endpoint_variant && raw.method != Method::fixed) {
        throw std::invalid_argument(
            "key 'endpoint_variant' applies to the fixed method only");
    }

    if (!rx.spec.family) {
        rx.spec.family = raw.method == Method::variable
                             ? NodeFamily::legendre_shifted
                             : NodeFamily::equidistant;
    }
    if (raw.method == Method::variable &&
        *rx.spec.family != NodeFamily::legendre_shifted &&
        *rx.spec.family != NodeFamily::chebyshev1) {
        throw std::invalid_argument(
            "key 'family': the variable method needs legendre-shifted or "
            "chebyshev1, got " +
            family_name(*rx.spec.family));
    }
    if (raw.method == Method::stiff &&
        !family_includes_endpoints(*rx.spec.family)) {
        throw std::invalid_argument(
            "key 'family': the stiff method needs equidistant or chebyshev2, "
            "got " +
            family_name(*rx.spec.family));
    }
    if (raw.method == Method::stiff && !rx.spec.tau) {
        rx.spec.tau = 10.0;
    }

    rx.problem = raw.xf ? get_problem(raw.problem, *raw.xf)
                        : get_problem(raw.problem);
    rx.spec.xf = rx.problem.xf;

    rx.cfg.method = raw.method;
    rx.cfg.family = *rx.spec.family;
    rx.cfg.m = raw.m;
    rx.cfg.m_max = raw.m_max;
    rx.cfg.M = raw.M;
    rx.cfg.eps = raw.eps;
    rx.cfg.max_iter = raw.max_iter;
    rx.cfg.tau = rx.spec.tau.value_or(10.0);
    rx.cfg.endpoint_variant = raw.endpoint_variant;
    return rx;
}

} // namespace

std::vector<ExperimentSpec> parse_run_config(std::istream& in) {
    std::vector<ExperimentSpec> specs;
    ExperimentSpec current;
    bool in_block = false;
    int line_no = 0;
    std::string line;

    auto flush = [&] {
        if (in_block) {
            specs.push_back(current);
            current = ExperimentSpec{};
            in_block = false;
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty()) {
            flush();
            continue;
        }
        if (text.front() == '#') {
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("run config line " +
                                        std::to_string(line_no) +
                                        ": expected key=value, got '" + text + "'");
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        try {
            apply_key(current, key, value);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("run config line " +
                                        std::to_string(line_no) + ": " + e.what());
        }
        in_block = true;
    }
    flush();
    return specs;
}

ExperimentRow run_experiment(const ExperimentSpec& spec) {
    ResolvedExperiment rx = resolve_spec(spec);

    SolutionTrace trace;
    switch (rx.cfg.method) {
    case Method::fixed:
        trace = solve_fixed(rx.problem, rx.cfg);
        break;
    case Method::variable:
        trace = solve_variable(rx.problem, rx.cfg);
        break;
    case Method::stiff:
        trace = solve_stiff(rx.problem, rx.cfg);
        break;
    }

    ExperimentRow row;
    row.spec = rx.spec;
    if (rx.problem.exact) {
        row.error = max_error(trace, rx.problem);
    }
    row.nf = trace.nf;
    row.warning_count = static_cast<int>(trace.warnings.size());
    if (!trace.iters.empty()) {
        row.iters_min = *std::min_element(trace.iters.begin(), trace.iters.end());
        row.iters_max = *std::max_element(trace.iters.begin(), trace.iters.end());
        double sum = 0.0;
        for (int it : trace.iters) {
            sum += it;
        }
        row.iters_mean = sum / static_cast<double>(trace.iters.size());
    }
    return row;
}

TableFormat parse_table_format(const std::string& tag) {
    if (tag == "csv") return TableFormat::csv;
    if (tag == "markdown") return TableFormat::markdown;
    throw std::invalid_argument("unknown table format: " + tag);
}

namespace {

std::string render_cells(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows,
                         TableFormat format) {
    std::ostringstream out;
    if (format == TableFormat::csv) {
        for (std::size_t c = 0; c < headers.size(); ++c) {
            out << (c ? "," : "") << headers[c];
        }
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                out << (c ? "," : "") << row[c];
            }
            out << '\n';
        }
    } else {
        auto line = [&out](const std::vector<std::string>& cells) {
            out << '|';
            for (const auto& cell : cells) {
                out << ' ' << cell << " |";
            }
            out << '\n';
        };
        line(headers);
        line(std::vector<std::string>(headers.size(), "---"));
        for (const auto& row : rows) {
            line(row);
        }
    }
    return out.str();
}

std::vector<std::string> row_cells(const ExperimentRow& row) {
    const bool variable = row.spec.method == Method::variable;
    return {
        row.spec.problem,
        method_name(row.spec.method),
        row.spec.family ? family_name(*row.spec.family) : "",
        std::to_string(variable ? row.spec.m_max : row.spec.m),
        std::to_string(row.spec.M),
        fmt(row.spec.eps),
        row.spec.xf ? fmt(*row.spec.xf) : "",
        row.spec.tau ? fmt(*row.spec.tau) : "",
        row.error ? fmt(*row.error) : "",
        fmt_ll(row.nf),
    };
}

} // namespace

std::string emit_table(const std::vector<ExperimentRow>& rows, TableFormat format) {
    if (rows.empty()) {
        throw std::invalid_argument("emit_table: no rows to render");
    }
    static const std::vector<std::string> headers = {
        "problem", "method", "family", "m", "M",
        "eps",     "xf",     "tau",    "error", "nf"};
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const auto& row : rows) {
        cells.push_back(row_cells(row));
    }
    return render_cells(headers, cells, format);
}

namespace {

ExperimentSpec base_spec(const std::string& problem, Method method, double eps,
                         int M) {
    ExperimentSpec spec;
    spec.problem = problem;
    spec.method = method;
    spec.eps = eps;
    spec.M = M;
    return spec;
}

// Two experiments per row (left/right columns of the paired benchmark
// layout), rendered after the shared configuration cells.
std::string paired_table(const std::vector<std::string>& config_headers,
                         const std::string& left, const std::string& right,
                         const std::vector<std::vector<std::string>>& config_cells,
                         const std::vector<std::pair<ExperimentSpec, ExperimentSpec>>& pairs,
                         TableFormat format) {
    std::vector<std::string> headers = config_headers;
    headers.push_back(left + " error");
    headers.push_back(left + " nf");
    headers.push_back(right + " error");
    headers.push_back(right + " nf");

    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        ExperimentRow lhs = run_experiment(pairs[i].first);
        ExperimentRow rhs = run_experiment(pairs[i].second);
        std::vector<std::string> row = config_cells[i];
        row.push_back(lhs.error ? fmt(*lhs.error) : "");
        row.push_back(fmt_ll(lhs.nf));
        row.push_back(rhs.error ? fmt(*rhs.error) : "");
        row.push_back(fmt_ll(rhs.nf));
        cells.push_back(std::move(row));
    }
    return render_cells(headers, cells, format);
}

constexpr double pi = std::numbers::pi;

// (x_f, M, eps) rows shared by the second and third benchmark tables.
const std::vector<std::tuple<double, int, double>> orbit_configs = {
    {2 * pi, 10, 1e-5}, {2 * pi, 10, 1e-9}, {4 * pi, 10, 1e-5},
    {4 * pi, 20, 1e-9}, {6 * pi, 10, 1e-5}, {6 * pi, 40, 1e-9},
};

} // namespace

std::string emit_builtin_table(int which, TableFormat format) {
    switch (which) {
    case 1: {
        ExperimentSpec fixed = base_spec("ex1", Method::fixed, 1e-5, 5);
        fixed.m = 3;
        ExperimentSpec variable = base_spec("ex1", Method::variable, 1e-5, 5);
        return paired_table({"problem", "M", "eps"}, "fixed", "variable",
                            {{"ex1", "5", fmt(1e-5)}}, {{fixed, variable}},
                            format);
    }
    case 2: {
        std::vector<std::vector<std::string>> config_cells;
        std::vector<std::pair<ExperimentSpec, ExperimentSpec>> pairs;
        for (const auto& [xf, M, eps] : orbit_configs) {
            ExperimentSpec fixed = base_spec("ex2", Method::fixed, eps, M);
            fixed.m = 3;
            fixed.xf = xf;
            ExperimentSpec variable = base_spec("ex2", Method::variable, eps, M);
            variable.xf = xf;
            config_cells.push_back({fmt(xf), std::to_string(M), fmt(eps)});
            pairs.emplace_back(fixed, variable);
        }
        return paired_table({"xf", "M", "eps"}, "fixed", "variable",
                            config_cells, pairs, format);
    }
    case 3: {
        std::vector<std::vector<std::string>> config_cells;
        std::vector<std::pair<ExperimentSpec, ExperimentSpec>> pairs;
        for (const auto& [xf, M, eps] : orbit_configs) {
            ExperimentSpec equidistant = base_spec("ex2", Method::fixed, eps, M);
            equidistant.m = 5;
            equidistant.xf = xf;
            ExperimentSpec chebyshev = equidistant;
            chebyshev.family = NodeFamily::chebyshev2;
            config_cells.push_back({fmt(xf), std::to_string(M), fmt(eps)});
            pairs.emplace_back(equidistant, chebyshev);
        }
        return paired_table({"xf", "M", "eps"}, "equidistant", "chebyshev2",
                            config_cells, pairs, format);
    }
    case 4: {
        std::vector<std::vector<std::string>> config_cells;
        std::vector<std::pair<ExperimentSpec, ExperimentSpec>> pairs;
        for (const auto& [M, eps] :
             std::vector<std::pair<int, double>>{{300, 1e-5}, {500, 1e-7}}) {
            ExperimentSpec equidistant = base_spec("ex4", Method::stiff, eps, M);
            equidistant.m = 5;
            equidistant.tau = 10.0;
            ExperimentSpec chebyshev = equidistant;
            chebyshev.family = NodeFamily::chebyshev2;
            config_cells.push_back({std::to_string(M), fmt(eps)});
            pairs.emplace_back(equidistant, chebyshev);
        }
        return paired_table({"M", "eps"}, "equidistant", "chebyshev2",
                            config_cells, pairs, format);
    }
    case 5: {
        ExperimentSpec equidistant = base_spec("ex5", Method::stiff, 1e-7, 20);
        equidistant.m = 5;
        equidistant.tau = 10.0;
        ExperimentSpec chebyshev = equidistant;
        chebyshev.family = NodeFamily::chebyshev2;
        return paired_table({"problem", "M", "eps"}, "equidistant", "chebyshev2",
                            {{"ex5", "20", fmt(1e-7)}},
                            {{equidistant, chebyshev}}, format);
    }
    default:
        throw std::invalid_argument("tables: 'which' must be between 1 and 5, got " +
                                    std::to_string(which));
    }
}

} // namespace picard
