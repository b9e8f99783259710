#include "zeno/zeno_c.h"

#include <cstring>
#include <string>
#include <utility>

#include "critical.hpp"
#include "cross_check.hpp"
#include "engine.hpp"
#include "xx_chain.hpp"
#include "xx_trace.hpp"

struct zeno_trace {
    zeno::ZenoTrace trace;
};

struct zeno_xx_model {
    zeno::ChainConfig cfg;
    zeno::MeasurementConfig meas;
};

struct zeno_qnd_model {
    zeno::QndModel model;
};

struct zeno_critical_list {
    zeno::CriticalTimes crit;
};

namespace {

thread_local std::string g_last_error;

zeno_status to_status(zeno::ErrorCode code) {
    switch (code) {
        case zeno::ErrorCode::InvalidArgument: return ZENO_ERROR_INVALID_ARGUMENT;
        case zeno::ErrorCode::NonHermitian: return ZENO_ERROR_NON_HERMITIAN;
        case zeno::ErrorCode::ConvergenceFailure: return ZENO_ERROR_CONVERGENCE_FAILURE;
        case zeno::ErrorCode::SizeLimit: return ZENO_ERROR_SIZE_LIMIT;
        case zeno::ErrorCode::NumericDrift: return ZENO_ERROR_NUMERIC_DRIFT;
        case zeno::ErrorCode::BoundaryViolation: return ZENO_ERROR_BOUNDARY;
        case zeno::ErrorCode::ZeroEigenvalue: return ZENO_ERROR_ZERO_EIGENVALUE;
    }
    return ZENO_ERROR_INTERNAL;
}

// Runs the body, translating exceptions into statuses and stashing the
// message for zeno_last_error_message.
template <typename Fn>
zeno_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return ZENO_OK;
    } catch (const zeno::ZenoError& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ZENO_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return ZENO_ERROR_INTERNAL;
    }
}

zeno_status invalid(const char* message) {
    g_last_error = message;
    return ZENO_ERROR_INVALID_ARGUMENT;
}

zeno::Matrix complex_matrix(const double* interleaved, Eigen::Index rows,
                            Eigen::Index cols) {
    zeno::Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) {
            const double* entry = interleaved + 2 * (r * cols + c);
            m(r, c) = zeno::Complex(entry[0], entry[1]);
        }
    return m;
}

zeno::Vector complex_vector(const double* interleaved, Eigen::Index size) {
    zeno::Vector v(size);
    for (Eigen::Index i = 0; i < size; ++i)
        v[i] = zeno::Complex(interleaved[2 * i], interleaved[2 * i + 1]);
    return v;
}

}  // namespace

extern "C" {

const char* zeno_status_name(zeno_status status) {
    switch (status) {
        case ZENO_OK: return "ok";
        case ZENO_ERROR_INVALID_ARGUMENT: return "invalid-argument";
        case ZENO_ERROR_NON_HERMITIAN: return "non-hermitian";
        case ZENO_ERROR_CONVERGENCE_FAILURE: return "convergence-failure";
        case ZENO_ERROR_SIZE_LIMIT: return "size-limit";
        case ZENO_ERROR_NUMERIC_DRIFT: return "numeric-drift";
        case ZENO_ERROR_BOUNDARY: return "boundary";
        case ZENO_ERROR_ZERO_EIGENVALUE: return "zero-eigenvalue";
        case ZENO_ERROR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* zeno_last_error_message(void) { return g_last_error.c_str(); }

/* Traces ---------------------------------------------------------------- */

int64_t zeno_trace_rows(const zeno_trace* trace) {
    return trace ? static_cast<int64_t>(trace->trace.rows()) : -1;
}

zeno_status zeno_trace_row(const zeno_trace* trace, int64_t index,
                           double* expectation, double* variance,
                           double* rel_fluctuation, int* fluct_defined) {
    if (!trace) return invalid("trace: null handle");
    if (index < 0 || index >= static_cast<int64_t>(trace->trace.rows()))
        return invalid("trace: row index out of range");
    const auto i = static_cast<std::size_t>(index);
    if (expectation) *expectation = trace->trace.expectation[i];
    if (variance) *variance = trace->trace.variance[i];
    if (rel_fluctuation) *rel_fluctuation = trace->trace.rel_fluctuation[i];
    if (fluct_defined) *fluct_defined = trace->trace.fluct_defined[i] ? 1 : 0;
    return ZENO_OK;
}

void zeno_trace_destroy(zeno_trace* trace) { delete trace; }

/* Hopping chain ---------------------------------------------------------- */

zeno_status zeno_xx_model_create(int64_t sites, double omega, double hopping,
                                 int periodic, double apparatus_eigenvalue,
                                 zeno_xx_model** out) {
    if (!out) return invalid("xx model: null output pointer");
    return guarded([&] {
        zeno_xx_model handle;
        handle.cfg.sites = sites;
        handle.cfg.omega = omega;
        handle.cfg.hopping = hopping;
        handle.cfg.boundary =
            periodic ? zeno::Boundary::Periodic : zeno::Boundary::Open;
        handle.meas.apparatus_eigenvalue = apparatus_eigenvalue;
        handle.cfg.validate();
        handle.meas.validate();
        *out = new zeno_xx_model(std::move(handle));
    });
}

void zeno_xx_model_destroy(zeno_xx_model* model) { delete model; }

zeno_status zeno_xx_run(const zeno_xx_model* model, double total_time,
                        int64_t steps, double tau_m, zeno_route route,
                        const double* initial_corr, zeno_trace** out) {
    if (!model) return invalid("xx run: null model");
    if (!out) return invalid("xx run: null output pointer");
    if (route != ZENO_ROUTE_STEPWISE && route != ZENO_ROUTE_SUPEROPERATOR)
        return invalid("xx run: unknown route");
    return guarded([&] {
        const zeno::ZenoSchedule sched{steps, total_time, tau_m};
        const zeno::Matrix corr =
            initial_corr
                ? complex_matrix(initial_corr, model->cfg.sites, model->cfg.sites)
                : zeno::localized_correlation(model->cfg.sites, zeno::kMonitoredSite);
        zeno::ZenoTrace trace =
            run_trace(model->cfg, model->meas, sched, corr,
                      route == ZENO_ROUTE_STEPWISE ? zeno::TraceRoute::Stepwise
                                                   : zeno::TraceRoute::Superoperator);
        *out = new zeno_trace{std::move(trace)};
    });
}

zeno_status zeno_xx_critical_times(double apparatus_eigenvalue,
                                   int64_t max_winding, double* out) {
    if (!out) return invalid("critical: null output pointer");
    return guarded([&] {
        const auto times = zeno::xx_critical_times(apparatus_eigenvalue, max_winding);
        std::memcpy(out, times.data(), times.size() * sizeof(double));
    });
}

zeno_status zeno_xx_cross_check(const zeno_xx_model* model, double total_time,
                                int64_t steps, double tau_m,
                                int corrupt_phase_sign,
                                double* max_step_deviation,
                                double* matpow_deviation, double* tolerance,
                                int* agree) {
    if (!model) return invalid("cross check: null model");
    return guarded([&] {
        zeno::CrossCheckOptions options;
        options.corrupt_phase_sign = corrupt_phase_sign != 0;
        const zeno::CrossCheckReport report = cross_check(
            model->cfg, model->meas, zeno::ZenoSchedule{steps, total_time, tau_m},
            options);
        if (max_step_deviation) *max_step_deviation = report.max_step_deviation;
        if (matpow_deviation) *matpow_deviation = report.matpow_deviation;
        if (tolerance) *tolerance = report.tolerance;
        if (agree) *agree = report.agree ? 1 : 0;
    });
}

/* Generic model ---------------------------------------------------------- */

zeno_status zeno_qnd_model_create(int64_t system_dim, int64_t apparatus_dim,
                                  const double* level_energies,
                                  const double* observable_diag,
                                  const double* transition,
                                  const double* meas_blocks,
                                  const double* system_state,
                                  const double* apparatus_state,
                                  zeno_qnd_model** out) {
    if (!out) return invalid("model: null output pointer");
    if (!level_energies || !observable_diag || !transition || !meas_blocks ||
        !system_state || !apparatus_state)
        return invalid("model: null data pointer");
    if (system_dim < 1 || apparatus_dim < 1)
        return invalid("model: dimensions must be positive");
    return guarded([&] {
        zeno::QndModel m;
        m.level_energies = Eigen::Map<const zeno::RealVector>(level_energies, system_dim);
        m.observable_diag = Eigen::Map<const zeno::RealVector>(observable_diag, system_dim);
        m.transition = complex_matrix(transition, system_dim, system_dim);
        for (int64_t n = 0; n < system_dim; ++n)
            m.meas_blocks.push_back(complex_matrix(
                meas_blocks + 2 * n * apparatus_dim * apparatus_dim, apparatus_dim,
                apparatus_dim));
        m.system_state = complex_vector(system_state, system_dim);
        m.apparatus_state = complex_vector(apparatus_state, apparatus_dim);
        m.validate();
        *out = new zeno_qnd_model{std::move(m)};
    });
}

void zeno_qnd_model_destroy(zeno_qnd_model* model) { delete model; }

int zeno_qnd_model_measurement_coupled(const zeno_qnd_model* model) {
    if (!model) return -1;
    return model->model.measurement_coupled() ? 1 : 0;
}

zeno_status zeno_qnd_run(const zeno_qnd_model* model, double total_time,
                         int64_t steps, double tau_m, zeno_trace** out) {
    if (!model) return invalid("run: null model");
    if (!out) return invalid("run: null output pointer");
    return guarded([&] {
        zeno::ZenoTrace trace =
            evolve_exact(model->model, zeno::ZenoSchedule{steps, total_time, tau_m});
        *out = new zeno_trace{std::move(trace)};
    });
}

/* Critical windows ------------------------------------------------------- */

zeno_status zeno_critical_enumerate(const double* eigenvalues, int64_t n_levels,
                                    int64_t block_dim, int64_t max_winding,
                                    zeno_critical_list** out) {
    if (!out) return invalid("critical: null output pointer");
    if (!eigenvalues) return invalid("critical: null eigenvalue array");
    if (n_levels < 1 || block_dim < 1)
        return invalid("critical: dimensions must be positive");
    return guarded([&] {
        std::vector<std::vector<double>> levels;
        for (int64_t n = 0; n < n_levels; ++n)
            levels.emplace_back(eigenvalues + n * block_dim,
                                eigenvalues + (n + 1) * block_dim);
        zeno::CriticalTimes crit = critical_times(
            zeno::BlockSpectra::from_eigenvalues(levels), max_winding);
        *out = new zeno_critical_list{std::move(crit)};
    });
}

int64_t zeno_critical_list_count(const zeno_critical_list* list) {
    return list ? static_cast<int64_t>(list->crit.times.size()) : -1;
}

int64_t zeno_critical_list_degenerate_count(const zeno_critical_list* list) {
    return list ? static_cast<int64_t>(list->crit.degenerate.size()) : -1;
}

zeno_status zeno_critical_list_degenerate_entry(const zeno_critical_list* list,
                                                int64_t index, int64_t* level_n,
                                                int64_t* level_l, int64_t* beta,
                                                int64_t* alpha) {
    if (!list) return invalid("critical list: null handle");
    if (index < 0 || index >= static_cast<int64_t>(list->crit.degenerate.size()))
        return invalid("critical list: degenerate index out of range");
    const zeno::DegeneratePair& pair =
        list->crit.degenerate[static_cast<std::size_t>(index)];
    if (level_n) *level_n = pair.level_n;
    if (level_l) *level_l = pair.level_l;
    if (beta) *beta = pair.beta;
    if (alpha) *alpha = pair.alpha;
    return ZENO_OK;
}

zeno_status zeno_critical_list_entry(const zeno_critical_list* list,
                                     int64_t index, double* tau_m,
                                     int64_t* level_n, int64_t* level_l,
                                     int64_t* beta, int64_t* alpha,
                                     int64_t* winding) {
    if (!list) return invalid("critical list: null handle");
    if (index < 0 || index >= static_cast<int64_t>(list->crit.times.size()))
        return invalid("critical list: index out of range");
    const zeno::CriticalTime& entry = list->crit.times[static_cast<std::size_t>(index)];
    if (tau_m) *tau_m = entry.tau_m;
    if (level_n) *level_n = entry.level_n;
    if (level_l) *level_l = entry.level_l;
    if (beta) *beta = entry.beta;
    if (alpha) *alpha = entry.alpha;
    if (winding) *winding = entry.winding;
    return ZENO_OK;
}

void zeno_critical_list_destroy(zeno_critical_list* list) { delete list; }

}  // extern "C"
