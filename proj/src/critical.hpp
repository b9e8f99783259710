// Enumeration of critical measurement windows — the window lengths at which
// the measurement phases rephase across an apparatus gap and the protocol
// stops suppressing transitions — plus the verdict for a given window.

#pragma once

#include <cstdint>
#include <vector>

#include "qnd_model.hpp"

namespace zeno {

// Nearby critical windows are merged when they differ by less than this,
// relative to their magnitude.
inline constexpr double kCriticalDedupTol = 1e-9;

struct CriticalTime {
    double tau_m = 0.0;          // window length at which suppression fails
    Eigen::Index level_n = -1;   // system level pair whose gap resonates
    Eigen::Index level_l = -1;
    Eigen::Index beta = -1;      // apparatus eigenvector index on level_n
    Eigen::Index alpha = -1;     // apparatus eigenvector index on level_l
    std::int64_t winding = 0;    // phase winding count, >= 1
};

struct DegeneratePair {
    Eigen::Index level_n = -1;
    Eigen::Index level_l = -1;
    Eigen::Index beta = -1;
    Eigen::Index alpha = -1;
};

struct CriticalTimes {
    std::vector<CriticalTime> times;         // ascending, deduplicated
    std::vector<DegeneratePair> degenerate;  // gaps below the degeneracy tolerance
};

// All windows 2 pi k / |gap| for k = 1..max_winding over every apparatus gap
// between distinct system levels.  Degenerate gaps contribute no window and
// are reported separately.
CriticalTimes critical_times(const BlockSpectra& spectra, std::int64_t max_winding);

enum class Verdict {
    Zeno,       // every gap acquires a nontrivial phase: transitions suppressed
    Critical,   // some gap rephases exactly: suppression fails
    Degenerate, // no resonance, but degenerate gaps limit what the phases reach
};

struct VerdictReport {
    Verdict verdict = Verdict::Zeno;
    // Witness of the first resonant gap when critical; indices are -1 otherwise.
    Eigen::Index level_n = -1;
    Eigen::Index level_l = -1;
    Eigen::Index beta = -1;
    Eigen::Index alpha = -1;
    bool has_degenerate = false;
};

// Classifies one measurement window against the apparatus spectra.  A
// resonance on any non-degenerate gap wins over mere degeneracy.
VerdictReport zeno_verdict(const BlockSpectra& spectra, double tau_m);

}  // namespace zeno
