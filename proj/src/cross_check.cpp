#include "cross_check.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fock.hpp"
#include "spectral.hpp"
#include "xx_trace.hpp"

namespace zeno {

CrossCheckReport cross_check(const ChainConfig& cfg, const MeasurementConfig& meas,
                             const ZenoSchedule& sched, const CrossCheckOptions& options) {
    cfg.validate();
    meas.validate();
    sched.validate();
    if (cfg.sites > kMaxCrossCheckSites)
        fail(ErrorCode::SizeLimit,
             "cross check: " + std::to_string(cfg.sites) + " sites exceed the cap of " +
                 std::to_string(kMaxCrossCheckSites));

    const Matrix initial = localized_correlation(cfg.sites, kMonitoredSite);

    CrossCheckReport report;
    const auto add_route = [&report](const std::string& name, const ZenoTrace& trace) {
        report.route_names.push_back(name);
        report.populations.push_back(trace.expectation);
    };

    add_route("stepwise correlation",
              run_trace(cfg, meas, sched, initial, TraceRoute::Stepwise));
    add_route("iterated cycle map",
              run_trace(cfg, meas, sched, initial, TraceRoute::Superoperator));
    add_route("many-body oracle",
              detail::fock_simulate_signed(cfg, meas, sched, 1u,
                                           options.corrupt_phase_sign ? 1.0 : -1.0));
    add_route("bare wavefunction",
              single_particle_simulate(cfg, meas, sched, kMonitoredSite));

    const std::size_t rows = report.populations.front().size();
    for (const auto& route : report.populations)
        if (route.size() != rows)
            fail(ErrorCode::InvalidArgument, "cross check: routes produced ragged traces");

    for (std::size_t i = 0; i < report.populations.size(); ++i)
        for (std::size_t j = i + 1; j < report.populations.size(); ++j)
            for (std::size_t row = 0; row < rows; ++row)
                report.max_step_deviation = std::max(
                    report.max_step_deviation,
                    std::abs(report.populations[i][row] - report.populations[j][row]));

    // Fifth route, final value only: the cycle map raised to the full cycle
    // count in one shot, which exercises the powering path used for long runs.
    {
        const Eigen::Index n = cfg.sites;
        const Matrix powered =
            matpow(cycle_superoperator(cfg, meas, sched.tau(), sched.tau_m),
                   static_cast<std::uint64_t>(sched.steps));
        Vector vec = Vector::Zero(n * n);
        vec[kMonitoredSite * n + kMonitoredSite] = 1.0;
        vec = powered * vec;
        const double final_population = vec[kMonitoredSite * n + kMonitoredSite].real();
        report.matpow_deviation =
            std::abs(final_population - report.populations.front().back());
    }

    report.agree = report.max_step_deviation <= report.tolerance &&
                   report.matpow_deviation <= report.tolerance;
    return report;
}

}  // namespace zeno
