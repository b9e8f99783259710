#include "xx_trace.hpp"

#include <string>

#include "engine.hpp"
#include "spectral.hpp"

namespace zeno {

namespace {

void push_population(ZenoTrace& trace, double population) {
    push_trace_row(trace, population, population * (1.0 - population));
}

ZenoTrace trace_stepwise(const ChainConfig& cfg, const MeasurementConfig& meas,
                         const ZenoSchedule& sched, Matrix corr,
                         bool audit_every_cycle) {
    const Matrix u = expm_unitary(hopping_matrix(cfg), sched.tau());
    const Complex phase =
        std::exp(Complex(0.0, meas.apparatus_eigenvalue * sched.tau_m));

    ZenoTrace trace;
    push_population(trace, corr(kMonitoredSite, kMonitoredSite).real());
    for (std::int64_t k = 1; k <= sched.steps; ++k) {
        corr = u.adjoint() * corr * u;
        for (Eigen::Index m = 0; m < corr.cols(); ++m)
            if (m != kMonitoredSite) corr(kMonitoredSite, m) *= phase;
        for (Eigen::Index n = 0; n < corr.rows(); ++n)
            if (n != kMonitoredSite) corr(n, kMonitoredSite) *= std::conj(phase);

        if (audit_every_cycle) check_correlation(corr, kDriftTol);
        push_population(trace, corr(kMonitoredSite, kMonitoredSite).real());
    }
    check_correlation(corr, kDriftTol);
    return trace;
}

ZenoTrace trace_superoperator(const ChainConfig& cfg, const MeasurementConfig& meas,
                              const ZenoSchedule& sched, const Matrix& corr,
                              bool audit_every_cycle) {
    const Eigen::Index n = cfg.sites;
    const Matrix cycle = cycle_superoperator(cfg, meas, sched.tau(), sched.tau_m);

    Vector vec(n * n);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) vec[a * n + b] = corr(a, b);

    const auto unvec = [n](const Vector& v) {
        Matrix c(n, n);
        for (Eigen::Index a = 0; a < n; ++a)
            for (Eigen::Index b = 0; b < n; ++b) c(a, b) = v[a * n + b];
        return c;
    };

    ZenoTrace trace;
    push_population(trace, vec[kMonitoredSite * n + kMonitoredSite].real());
    for (std::int64_t k = 1; k <= sched.steps; ++k) {
        vec = cycle * vec;
        if (audit_every_cycle) check_correlation(unvec(vec), kDriftTol);
        push_population(trace, vec[kMonitoredSite * n + kMonitoredSite].real());
    }
    check_correlation(unvec(vec), kDriftTol);
    return trace;
}

}  // namespace

ZenoTrace run_trace(const ChainConfig& cfg, const MeasurementConfig& meas,
                    const ZenoSchedule& sched, const Matrix& initial_corr,
                    TraceRoute route, bool audit_every_cycle) {
    cfg.validate();
    meas.validate();
    sched.validate();
    if (initial_corr.rows() != cfg.sites || initial_corr.cols() != cfg.sites)
        fail(ErrorCode::InvalidArgument,
             "trace: correlation matrix does not match the chain size");
    check_correlation(initial_corr, kDriftTol);

    switch (route) {
        case TraceRoute::Stepwise:
            return trace_stepwise(cfg, meas, sched, initial_corr, audit_every_cycle);
        case TraceRoute::Superoperator:
            return trace_superoperator(cfg, meas, sched, initial_corr, audit_every_cycle);
    }
    fail(ErrorCode::InvalidArgument, "trace: unknown route");
}

}  // namespace zeno
