#include "commands.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <future>
#include <iostream>
#include <memory>
#include <vector>

#include "zeno/zeno_c.h"

#include "chart.hpp"
#include "config.hpp"
#include "table.hpp"

namespace zeno::cli {

namespace {

namespace fs = std::filesystem;

// The oracle command passes when every route deviation stays below this.
constexpr double kOracleGate = 1e-8;
// Populations may exceed the exact [0, 1] range by at most this much before
// the run is declared numerically corrupt.
constexpr double kPopulationSlack = 1e-9;

struct TraceDeleter {
    void operator()(zeno_trace* p) const { zeno_trace_destroy(p); }
};
struct XxModelDeleter {
    void operator()(zeno_xx_model* p) const { zeno_xx_model_destroy(p); }
};
struct QndModelDeleter {
    void operator()(zeno_qnd_model* p) const { zeno_qnd_model_destroy(p); }
};
struct CriticalDeleter {
    void operator()(zeno_critical_list* p) const { zeno_critical_list_destroy(p); }
};
using TracePtr = std::unique_ptr<zeno_trace, TraceDeleter>;
using XxModelPtr = std::unique_ptr<zeno_xx_model, XxModelDeleter>;
using QndModelPtr = std::unique_ptr<zeno_qnd_model, QndModelDeleter>;
using CriticalPtr = std::unique_ptr<zeno_critical_list, CriticalDeleter>;

int exit_code_for(zeno_status status) {
    switch (status) {
        case ZENO_OK:
            return 0;
        case ZENO_ERROR_NUMERIC_DRIFT:
            return 3;
        case ZENO_ERROR_INTERNAL:
            return 1;
        default:
            return 2;
    }
}

int report_failure(const std::string& stage, zeno_status status,
                   const std::string& message) {
    std::cerr << "error: " << stage << " (" << zeno_status_name(status)
              << "): " << message << "\n";
    return exit_code_for(status);
}

int report_failure(const std::string& stage, zeno_status status) {
    return report_failure(stage, status, zeno_last_error_message());
}

void echo_config(const Config& config) {
    for (const std::string& line : config.echo_lines()) std::cout << line << "\n";
}

std::string resolve_output(const std::string& out_dir, const std::string& name) {
    const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);  // best effort; open failure reports below
    return (dir / name).string();
}

void check_kind(Config& config, const std::string& expected) {
    const std::string kind = config.require_string("experiment", "kind");
    if (kind != expected)
        throw ConfigError(config.line_of("experiment", "kind"),
                          "experiment.kind is '" + kind + "' but the '" +
                              expected + "' command was invoked");
}

struct ChainParams {
    std::int64_t sites = 0;
    double omega = 0.0;
    double hopping = 0.0;
    bool periodic = true;
    double pointer_shift = 0.0;  // apparatus eigenvalue attached to occupation
};

ChainParams load_chain(Config& config) {
    ChainParams chain;
    chain.sites = config.require_int("chain", "L");
    chain.hopping = config.require_double("chain", "g");
    chain.omega = config.get_double("chain", "omega", 0.0);
    const std::string boundary =
        config.get_string("chain", "boundary", "periodic");
    if (boundary == "periodic") {
        chain.periodic = true;
    } else if (boundary == "open") {
        chain.periodic = false;
    } else {
        throw ConfigError(config.line_of("chain", "boundary"),
                          "chain.boundary must be 'periodic' or 'open', got '" +
                              boundary + "'");
    }
    chain.pointer_shift = config.require_double("measurement", "r_E");
    return chain;
}

struct ScheduleParams {
    double total_time = 0.0;
    std::int64_t steps = 0;
    double tau_m = 0.0;
};

ScheduleParams load_schedule(Config& config) {
    ScheduleParams schedule;
    schedule.total_time = config.require_double("schedule", "t");
    schedule.steps = config.require_int("schedule", "N");
    schedule.tau_m = config.require_double("schedule", "tau_m");
    if (schedule.steps < 1)
        throw ConfigError(config.line_of("schedule", "N"),
                          "schedule.N must be at least 1");
    if (!(schedule.total_time > 0.0))
        throw ConfigError(config.line_of("schedule", "t"),
                          "schedule.t must be positive");
    if (schedule.tau_m < 0.0)
        throw ConfigError(config.line_of("schedule", "tau_m"),
                          "schedule.tau_m must be nonnegative");
    return schedule;
}

XxModelPtr create_chain_model(const ChainParams& chain, zeno_status& status) {
    zeno_xx_model* raw = nullptr;
    status = zeno_xx_model_create(chain.sites, chain.omega, chain.hopping,
                                  chain.periodic ? 1 : 0, chain.pointer_shift,
                                  &raw);
    return XxModelPtr(raw);
}

struct RowData {
    double expectation = 0.0;
    double variance = 0.0;
    double fluctuation = 0.0;
    int defined = 0;
};

zeno_status read_row(const zeno_trace* trace, std::int64_t index, RowData& row) {
    return zeno_trace_row(trace, index, &row.expectation, &row.variance,
                          &row.fluctuation, &row.defined);
}

// Enforces the emitted-population invariant: values within roundoff of the
// physical range are clamped, anything further out is numeric drift.
bool sanitize_population(double& population) {
    if (population < -kPopulationSlack ||
        population > 1.0 + kPopulationSlack)
        return false;
    if (population < 0.0) population = 0.0;
    return true;
}

}  // namespace

int cmd_xx_run(const CommandArgs& args) {
    Config config = Config::parse_file(args.config_path);
    check_kind(config, "xx-run");
    const ChainParams chain = load_chain(config);
    const ScheduleParams schedule = load_schedule(config);
    const std::string csv_name = config.get_string("output", "csv", "xx-run.csv");
    const std::string svg_name = config.get_string("output", "svg", "xx-run.svg");
    config.reject_unconsumed();
    echo_config(config);

    zeno_status status = ZENO_OK;
    XxModelPtr model = create_chain_model(chain, status);
    if (status != ZENO_OK) return report_failure("model construction", status);

    zeno_trace* raw_trace = nullptr;
    status = zeno_xx_run(model.get(), schedule.total_time, schedule.steps,
                         schedule.tau_m, ZENO_ROUTE_STEPWISE, nullptr,
                         &raw_trace);
    if (status != ZENO_OK) return report_failure("protocol run", status);
    TracePtr trace(raw_trace);

    const double tau = schedule.total_time / static_cast<double>(schedule.steps);
    const double cycle_time = tau + schedule.tau_m;
    const std::string csv_path = resolve_output(args.out_dir, csv_name);
    CsvWriter csv(csv_path, {"step", "time", "population", "relative_fluctuation"});

    std::vector<double> steps, populations, fluctuations;
    const std::int64_t rows = zeno_trace_rows(trace.get());
    for (std::int64_t k = 0; k < rows; ++k) {
        RowData row;
        status = read_row(trace.get(), k, row);
        if (status != ZENO_OK) return report_failure("trace read", status);
        double population = row.expectation;
        if (!sanitize_population(population)) {
            std::cerr << "error: population " << population << " at step " << k
                      << " is outside the physical range\n";
            return 3;
        }
        const double time = static_cast<double>(k) * cycle_time;
        const double fluct =
            row.defined ? row.fluctuation : std::nan("");
        csv.row({format_value(k), format_value(time), format_value(population),
                 format_value(fluct)});
        steps.push_back(static_cast<double>(k));
        populations.push_back(population);
        fluctuations.push_back(fluct);
    }
    std::cout << "wrote " << csv_path << "\n";

    if (args.plot) {
        const std::string svg_path = resolve_output(args.out_dir, svg_name);
        write_chart(svg_path,
                    {{"monitored-site population", "step", "population", steps,
                      populations},
                     {"relative fluctuation", "step", "relative fluctuation",
                      steps, fluctuations}});
        std::cout << "wrote " << svg_path << "\n";
    }
    return 0;
}

namespace {

struct SweepPoint {
    zeno_status status = ZENO_OK;
    std::string message;
    double population = 0.0;
    double fluctuation = 0.0;
};

SweepPoint run_sweep_point(ChainParams chain, ScheduleParams schedule,
                           const std::string& axis, double value) {
    if (axis == "tau_m") schedule.tau_m = value;
    if (axis == "r_E") chain.pointer_shift = value;
    if (axis == "g") chain.hopping = value;
    if (axis == "N") schedule.steps = static_cast<std::int64_t>(value);

    SweepPoint point;
    XxModelPtr model = create_chain_model(chain, point.status);
    if (point.status != ZENO_OK) {
        point.message = zeno_last_error_message();
        return point;
    }
    zeno_trace* raw_trace = nullptr;
    point.status = zeno_xx_run(model.get(), schedule.total_time, schedule.steps,
                               schedule.tau_m, ZENO_ROUTE_STEPWISE, nullptr,
                               &raw_trace);
    if (point.status != ZENO_OK) {
        point.message = zeno_last_error_message();
        return point;
    }
    TracePtr trace(raw_trace);
    RowData row;
    point.status = read_row(trace.get(), zeno_trace_rows(trace.get()) - 1, row);
    if (point.status != ZENO_OK) {
        point.message = zeno_last_error_message();
        return point;
    }
    point.population = row.expectation;
    point.fluctuation = row.defined ? row.fluctuation : std::nan("");
    return point;
}

}  // namespace

int cmd_xx_sweep(const CommandArgs& args) {
    Config config = Config::parse_file(args.config_path);
    check_kind(config, "xx-sweep");
    const ChainParams chain = load_chain(config);
    const ScheduleParams schedule = load_schedule(config);
    const std::string axis = config.require_string("sweep", "parameter");
    if (axis != "tau_m" && axis != "N" && axis != "r_E" && axis != "g")
        throw ConfigError(config.line_of("sweep", "parameter"),
                          "sweep.parameter must be one of tau_m, N, r_E, g");
    const std::vector<double> values = config.require_double_list("sweep", "values");
    if (values.empty())
        throw ConfigError(config.line_of("sweep", "values"),
                          "sweep.values must be nonempty");
    for (double value : values) {
        if (!std::isfinite(value))
            throw ConfigError(config.line_of("sweep", "values"),
                              "sweep.values must all be finite");
        if (axis == "N" && (value < 1.0 || value != std::floor(value)))
            throw ConfigError(config.line_of("sweep", "values"),
                              "an N sweep needs positive integers");
    }
    const std::string csv_name =
        config.get_string("output", "csv", "xx-sweep.csv");
    const std::string svg_name =
        config.get_string("output", "svg", "xx-sweep.svg");
    config.reject_unconsumed();
    echo_config(config);

    // Sweep points are independent; run them concurrently and gather in
    // input order so the CSV stays deterministic.
    std::vector<std::future<SweepPoint>> futures;
    futures.reserve(values.size());
    for (double value : values)
        futures.push_back(std::async(std::launch::async, run_sweep_point, chain,
                                     schedule, axis, value));

    std::vector<SweepPoint> points;
    points.reserve(values.size());
    for (auto& future : futures) points.push_back(future.get());

    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].status != ZENO_OK)
            return report_failure("sweep point " + format_value(values[i]),
                                  points[i].status, points[i].message);
        if (!sanitize_population(points[i].population)) {
            std::cerr << "error: population " << points[i].population
                      << " at sweep value " << format_value(values[i])
                      << " is outside the physical range\n";
            return 3;
        }
    }

    const std::string csv_path = resolve_output(args.out_dir, csv_name);
    CsvWriter csv(csv_path,
                  {"sweep_value", "final_population", "final_relative_fluctuation"});
    for (std::size_t i = 0; i < points.size(); ++i)
        csv.row({format_value(values[i]), format_value(points[i].population),
                 format_value(points[i].fluctuation)});
    std::cout << "wrote " << csv_path << "\n";

    if (args.plot) {
        std::vector<double> populations, fluctuations;
        for (const SweepPoint& point : points) {
            populations.push_back(point.population);
            fluctuations.push_back(point.fluctuation);
        }
        const std::string svg_path = resolve_output(args.out_dir, svg_name);
        write_chart(svg_path, {{"final population", axis, "population", values,
                                populations},
                               {"final relative fluctuation", axis,
                                "relative fluctuation", values, fluctuations}});
        std::cout << "wrote " << svg_path << "\n";
    }
    return 0;
}

namespace {

using ComplexRows = std::vector<std::vector<std::complex<double>>>;

void require_shape(const ComplexRows& rows, std::size_t n, int line,
                   const std::string& what) {
    if (rows.size() != n)
        throw ConfigError(line, what + ": expected " + std::to_string(n) +
                                    " rows, got " + std::to_string(rows.size()));
    for (const auto& row : rows)
        if (row.size() != n)
            throw ConfigError(line, what + ": expected square " +
                                        std::to_string(n) + "x" +
                                        std::to_string(n) + " layout");
}

void append_interleaved(std::vector<double>& flat, const ComplexRows& rows) {
    for (const auto& row : rows)
        for (const std::complex<double>& entry : row) {
            flat.push_back(entry.real());
            flat.push_back(entry.imag());
        }
}

void append_interleaved(std::vector<double>& flat,
                        const std::vector<std::complex<double>>& entries) {
    for (const std::complex<double>& entry : entries) {
        flat.push_back(entry.real());
        flat.push_back(entry.imag());
    }
}

}  // namespace

int cmd_generic_run(const CommandArgs& args) {
    Config config = Config::parse_file(args.config_path);
    check_kind(config, "generic-run");

    const std::vector<double> levels = config.require_double_list("model", "levels");
    const std::size_t system_dim = levels.size();
    if (system_dim < 2)
        throw ConfigError(config.line_of("model", "levels"),
                          "model.levels needs at least two entries");
    const std::vector<double> observable =
        config.require_double_list("model", "observable");
    if (observable.size() != system_dim)
        throw ConfigError(config.line_of("model", "observable"),
                          "model.observable must match model.levels in length");

    const ComplexRows transition = config.require_complex_rows("model", "transition");
    require_shape(transition, system_dim, config.line_of("model", "transition"),
                  "model.transition");

    std::vector<ComplexRows> blocks;
    std::size_t apparatus_dim = 0;
    for (std::size_t level = 0; level < system_dim; ++level) {
        const std::string key = "meas_block_" + std::to_string(level);
        const ComplexRows block = config.require_complex_rows("model", key);
        if (level == 0) apparatus_dim = block.size();
        require_shape(block, apparatus_dim, config.line_of("model", key),
                      "model." + key);
        blocks.push_back(block);
    }

    const auto system_state = config.require_complex_list("model", "system_state");
    if (system_state.size() != system_dim)
        throw ConfigError(config.line_of("model", "system_state"),
                          "model.system_state must have one entry per level");
    const auto apparatus_state =
        config.require_complex_list("model", "apparatus_state");
    if (apparatus_state.size() != apparatus_dim)
        throw ConfigError(config.line_of("model", "apparatus_state"),
                          "model.apparatus_state must match the pointer block size");

    const ScheduleParams schedule = load_schedule(config);
    const std::string csv_name =
        config.get_string("output", "csv", "generic-run.csv");
    const std::string svg_name =
        config.get_string("output", "svg", "generic-run.svg");
    config.reject_unconsumed();
    echo_config(config);

    std::vector<double> transition_flat;
    append_interleaved(transition_flat, transition);
    std::vector<double> blocks_flat;
    for (const ComplexRows& block : blocks) append_interleaved(blocks_flat, block);
    std::vector<double> system_flat;
    append_interleaved(system_flat, system_state);
    std::vector<double> apparatus_flat;
    append_interleaved(apparatus_flat, apparatus_state);

    zeno_qnd_model* raw_model = nullptr;
    zeno_status status = zeno_qnd_model_create(
        static_cast<std::int64_t>(system_dim),
        static_cast<std::int64_t>(apparatus_dim), levels.data(),
        observable.data(), transition_flat.data(), blocks_flat.data(),
        system_flat.data(), apparatus_flat.data(), &raw_model);
    if (status != ZENO_OK) return report_failure("model construction", status);
    QndModelPtr model(raw_model);

    if (zeno_qnd_model_measurement_coupled(model.get()) == 0)
        std::cout << "note: all pointer blocks are identical; the apparatus "
                     "records nothing\n";

    zeno_trace* raw_trace = nullptr;
    status = zeno_qnd_run(model.get(), schedule.total_time, schedule.steps,
                          schedule.tau_m, &raw_trace);
    if (status != ZENO_OK) return report_failure("protocol run", status);
    TracePtr trace(raw_trace);

    const double tau = schedule.total_time / static_cast<double>(schedule.steps);
    const double cycle_time = tau + schedule.tau_m;
    const std::string csv_path = resolve_output(args.out_dir, csv_name);
    CsvWriter csv(csv_path,
                  {"step", "time", "expectation", "variance",
                   "relative_fluctuation"});
    std::vector<double> steps, expectations, fluctuations;
    const std::int64_t rows = zeno_trace_rows(trace.get());
    for (std::int64_t k = 0; k < rows; ++k) {
        RowData row;
        status = read_row(trace.get(), k, row);
        if (status != ZENO_OK) return report_failure("trace read", status);
        const double time = static_cast<double>(k) * cycle_time;
        const double fluct = row.defined ? row.fluctuation : std::nan("");
        csv.row({format_value(k), format_value(time),
                 format_value(row.expectation), format_value(row.variance),
                 format_value(fluct)});
        steps.push_back(static_cast<double>(k));
        expectations.push_back(row.expectation);
        fluctuations.push_back(fluct);
    }
    std::cout << "wrote " << csv_path << "\n";

    if (args.plot) {
        const std::string svg_path = resolve_output(args.out_dir, svg_name);
        write_chart(svg_path,
                    {{"monitored observable", "step", "expectation", steps,
                      expectations},
                     {"relative fluctuation", "step", "relative fluctuation",
                      steps, fluctuations}});
        std::cout << "wrote " << svg_path << "\n";
    }
    return 0;
}

int cmd_critical(const CommandArgs& args) {
    Config config = Config::parse_file(args.config_path);
    check_kind(config, "critical");

    const bool has_shift = config.has_key("critical", "r_E");
    const bool has_blocks = config.has_key("critical", "blocks");
    if (has_shift == has_blocks)
        throw ConfigError(0,
                          "[critical] needs exactly one of r_E (single pointer "
                          "shift) or blocks (explicit spectra)");

    std::vector<double> eigenvalues;
    std::int64_t n_levels = 0;
    std::int64_t block_dim = 0;
    if (has_shift) {
        // A lone pointer shift is shorthand for the two-level spectra {0},{r}.
        const double shift = config.require_double("critical", "r_E");
        eigenvalues = {0.0, shift};
        n_levels = 2;
        block_dim = 1;
    } else {
        const ComplexRows rows = config.require_complex_rows("critical", "blocks");
        const int line = config.line_of("critical", "blocks");
        if (rows.size() < 2)
            throw ConfigError(line, "critical.blocks needs at least two blocks");
        block_dim = static_cast<std::int64_t>(rows.front().size());
        for (const auto& row : rows) {
            if (static_cast<std::int64_t>(row.size()) != block_dim)
                throw ConfigError(line,
                                  "critical.blocks must all have equal length");
            for (const std::complex<double>& entry : row) {
                if (entry.imag() != 0.0)
                    throw ConfigError(line,
                                      "critical.blocks entries must be real");
                eigenvalues.push_back(entry.real());
            }
        }
        n_levels = static_cast<std::int64_t>(rows.size());
    }
    const std::int64_t max_winding = config.get_int("critical", "k_max", 1);
    if (max_winding < 1)
        throw ConfigError(config.line_of("critical", "k_max"),
                          "critical.k_max must be at least 1");
    const std::string csv_name =
        config.get_string("output", "csv", "critical.csv");
    config.reject_unconsumed();
    echo_config(config);

    zeno_critical_list* raw_list = nullptr;
    zeno_status status = zeno_critical_enumerate(eigenvalues.data(), n_levels,
                                                 block_dim, max_winding, &raw_list);
    if (status != ZENO_OK) return report_failure("window enumeration", status);
    CriticalPtr list(raw_list);

    const std::int64_t degenerate = zeno_critical_list_degenerate_count(list.get());
    for (std::int64_t i = 0; i < degenerate; ++i) {
        std::int64_t level_n = 0, level_l = 0, beta = 0, alpha = 0;
        zeno_critical_list_degenerate_entry(list.get(), i, &level_n, &level_l,
                                            &beta, &alpha);
        std::cout << "warning: levels " << level_n << " and " << level_l
                  << " share eigenvalue (indices " << beta << "," << alpha
                  << "); no finite window exists for this pair\n";
    }

    const std::int64_t count = zeno_critical_list_count(list.get());
    const std::string csv_path = resolve_output(args.out_dir, csv_name);
    CsvWriter csv(csv_path,
                  {"tau_m_star", "level_n", "level_l", "beta", "alpha", "winding"});
    for (std::int64_t i = 0; i < count; ++i) {
        double window = 0.0;
        std::int64_t level_n = 0, level_l = 0, beta = 0, alpha = 0, winding = 0;
        status = zeno_critical_list_entry(list.get(), i, &window, &level_n,
                                          &level_l, &beta, &alpha, &winding);
        if (status != ZENO_OK) return report_failure("window read", status);
        csv.row({format_value(window), format_value(level_n),
                 format_value(level_l), format_value(beta), format_value(alpha),
                 format_value(winding)});
        std::cout << "tau_m* = " << format_value(window) << "  (levels "
                  << level_n << "," << level_l << " eigenpair " << beta << ","
                  << alpha << " winding " << winding << ")\n";
    }
    std::cout << "critical windows: " << count << "\n";
    std::cout << "wrote " << csv_path << "\n";
    return 0;
}

int cmd_oracle_check(const CommandArgs& args) {
    Config config = Config::parse_file(args.config_path);
    check_kind(config, "oracle-check");
    const ChainParams chain = load_chain(config);
    const ScheduleParams schedule = load_schedule(config);
    const bool corrupt = config.get_bool("oracle", "corrupt_phase_sign", false);
    config.reject_unconsumed();
    echo_config(config);

    zeno_status status = ZENO_OK;
    XxModelPtr model = create_chain_model(chain, status);
    if (status != ZENO_OK) return report_failure("model construction", status);

    double step_deviation = 0.0, endpoint_deviation = 0.0, tolerance = 0.0;
    int agree = 0;
    status = zeno_xx_cross_check(model.get(), schedule.total_time,
                                 schedule.steps, schedule.tau_m,
                                 corrupt ? 1 : 0, &step_deviation,
                                 &endpoint_deviation, &tolerance, &agree);
    if (status != ZENO_OK) return report_failure("oracle comparison", status);

    std::cout << "oracle-check: max per-step deviation = "
              << format_value(step_deviation) << "\n";
    std::cout << "oracle-check: matrix-power endpoint deviation = "
              << format_value(endpoint_deviation) << "\n";
    const double worst = std::max(step_deviation, endpoint_deviation);
    if (worst <= kOracleGate) {
        std::cout << "oracle-check: PASS (deviation " << format_value(worst)
                  << " within " << format_value(kOracleGate) << ")\n";
        return 0;
    }
    std::cerr << "oracle-check: FAIL (deviation " << format_value(worst)
              << " exceeds " << format_value(kOracleGate) << ")\n";
    return 4;
}

}  // namespace zeno::cli
