// First-order closed form for the Heisenberg-picture observable after N
// measurement cycles.  The transition term enters linearly in the free step
// length; every cycle contributes the same off-diagonal block up to a phase
// set by the apparatus gap, and those phases sum to a geometric kernel that
// the repeated measurements suppress.

#pragma once

#include "qnd_model.hpp"
#include "schedule.hpp"

namespace zeno {

// Commutator of the monitored observable with the transition term on the
// system space.  Entry (n, l) is (a_n - a_l) * transition(n, l); the diagonal
// vanishes identically.
Matrix transition_commutator(const QndModel& model);

// The observable after N cycles, expanded to first order in the free step
// length.  Joint-space matrix comparable directly with heisenberg_observable;
// the difference shrinks with the step length at fixed total time.
Matrix first_order_heisenberg(const QndModel& model, const ZenoSchedule& sched);

}  // namespace zeno
