#include "schedule.hpp"

#include <cmath>
#include <limits>

namespace zeno {

void ZenoSchedule::validate() const {
    if (steps < 1)
        fail(ErrorCode::InvalidArgument, "schedule: measurement count must be at least 1");
    if (!(total_time > 0.0) || !std::isfinite(total_time))
        fail(ErrorCode::InvalidArgument, "schedule: total time must be positive and finite");
    if (tau_m < 0.0 || !std::isfinite(tau_m))
        fail(ErrorCode::InvalidArgument, "schedule: measurement window must be nonnegative");
}

void push_trace_row(ZenoTrace& trace, double expectation, double variance) {
    trace.expectation.push_back(expectation);
    // Roundoff can push a tiny true variance slightly negative; clamp so the
    // square root below stays real.
    if (variance < 0.0 && variance > -1e-12) variance = 0.0;
    trace.variance.push_back(variance);

    if (expectation > kFluctuationFloor) {
        trace.rel_fluctuation.push_back(std::sqrt(variance) / expectation);
        trace.fluct_defined.push_back(1);
    } else {
        trace.rel_fluctuation.push_back(std::numeric_limits<double>::quiet_NaN());
        trace.fluct_defined.push_back(0);
    }
}

}  // namespace zeno
