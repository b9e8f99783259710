// Protocol traces for the hopping chain: monitored-site occupation after
// every cycle, computed either step by step on the correlation matrix or by
// iterating the vectorized cycle map.

#pragma once

#include "schedule.hpp"
#include "xx_chain.hpp"

namespace zeno {

enum class TraceRoute {
    Stepwise,       // conjugate the correlation matrix cycle by cycle
    Superoperator,  // iterate the vectorized cycle map
};

// Runs the protocol from the given initial correlation matrix and records the
// monitored-site occupation after each cycle (row 0 is the initial state).
// The occupation is a projector, so its variance is p - p^2.  The correlation
// matrix is audited before the first cycle and after the last; per-cycle
// audits are opt-in.
ZenoTrace run_trace(const ChainConfig& cfg, const MeasurementConfig& meas,
                    const ZenoSchedule& sched, const Matrix& initial_corr,
                    TraceRoute route = TraceRoute::Stepwise,
                    bool audit_every_cycle = false);

}  // namespace zeno
