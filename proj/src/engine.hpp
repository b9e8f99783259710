// Exact simulation of the measurement protocol on the joint system-apparatus
// space: alternate free propagation with the measurement propagator and track
// the monitored observable after every cycle.

#pragma once

#include "qnd_model.hpp"
#include "schedule.hpp"

namespace zeno {

// State-norm drift beyond this aborts a run as numerically unreliable.
inline constexpr double kDriftTol = 1e-8;

struct Moments {
    double expectation = 0.0;
    double variance = 0.0;
};

// First and second moments of an observable that is diagonal in the
// computational basis, evaluated on a normalized state.
Moments observable_moments(const Vector& psi, const RealVector& diagonal);

// Joint-space diagonal of the monitored observable (constant on each
// apparatus block).
RealVector joint_observable_diag(const QndModel& model);

// Initial joint state: system amplitudes tensored with apparatus amplitudes.
Vector joint_initial_state(const QndModel& model);

// Runs the full protocol and returns one trace row per cycle, including the
// k = 0 initial row.
ZenoTrace evolve_exact(const QndModel& model, const ZenoSchedule& sched);

// The monitored observable conjugated by the full N-cycle propagator, i.e.
// the exact Heisenberg-picture operator after the protocol.
Matrix heisenberg_observable(const QndModel& model, const ZenoSchedule& sched);

}  // namespace zeno
