// Protocol timing: N measurement cycles covering total free-evolution time t,
// each cycle being a free step of length t/N followed by a measurement window
// of length tau_m.

#pragma once

#include <cstdint>
#include <vector>

#include "types.hpp"

namespace zeno {

struct ZenoSchedule {
    std::int64_t steps = 0;   // number of cycles, N >= 1
    double total_time = 0.0;  // accumulated free-evolution time, > 0
    double tau_m = 0.0;       // measurement window per cycle, >= 0

    double tau() const { return total_time / static_cast<double>(steps); }

    void validate() const;
};

// Relative fluctuation is reported as NaN (and flagged undefined) when the
// expectation is at or below this floor.
inline constexpr double kFluctuationFloor = 1e-14;

// Per-cycle record of the monitored observable.  Row k describes the state
// after k cycles, so every trace starts with the k = 0 initial values.
struct ZenoTrace {
    std::vector<double> expectation;
    std::vector<double> variance;
    std::vector<double> rel_fluctuation;        // sqrt(variance)/expectation
    std::vector<std::uint8_t> fluct_defined;    // 0 when expectation <= floor

    std::size_t rows() const { return expectation.size(); }
};

// Appends one row, handling the undefined-fluctuation case in one place.
void push_trace_row(ZenoTrace& trace, double expectation, double variance);

}  // namespace zeno
