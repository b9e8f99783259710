// Consistency harness: runs the same single-particle protocol through every
// independent route — stepwise correlation matrix, iterated cycle map, its
// matrix power, the full many-body oracle, and the bare wavefunction — and
// reports the worst disagreement.

#pragma once

#include <string>
#include <vector>

#include "schedule.hpp"
#include "xx_chain.hpp"

namespace zeno {

// The many-body oracle grows as 2^L; past this the harness refuses to run.
inline constexpr std::int64_t kMaxCrossCheckSites = 10;

// Any two routes must agree on every cycle's population to within this.
inline constexpr double kCrossCheckTol = 1e-9;

struct CrossCheckOptions {
    // Deliberately flips the pointer phase in the many-body oracle so the
    // harness can demonstrate that it detects a broken route.
    bool corrupt_phase_sign = false;
};

struct CrossCheckReport {
    std::vector<std::string> route_names;
    std::vector<std::vector<double>> populations;  // per route, one row per cycle
    double max_step_deviation = 0.0;  // worst pairwise gap over all cycles
    double matpow_deviation = 0.0;    // powered cycle map vs stepwise, final cycle
    double tolerance = kCrossCheckTol;
    bool agree = false;
};

// Protocol starts from one particle on the monitored site.  Throws SizeLimit
// beyond kMaxCrossCheckSites; disagreement is reported, not thrown.
CrossCheckReport cross_check(const ChainConfig& cfg, const MeasurementConfig& meas,
                             const ZenoSchedule& sched,
                             const CrossCheckOptions& options = {});

}  // namespace zeno
