// Suppression certificate: the generator of first-order transitions
// accumulated over the whole protocol.  Away from critical windows its size
// stays bounded while the cycle count grows, so its norm per cycle decays —
// that decay is the quantitative statement of measurement-induced freezing.

#pragma once

#include <cstdint>

#include "qnd_model.hpp"

namespace zeno {

// Closed form for the cycle-indexed phase sum between the apparatus blocks of
// levels m and n: sum over k = 1..cycles of the product of the two blocks'
// conjugate propagators at k measurement windows.
Matrix accumulated_phase_sum(const BlockSpectra& spectra, Eigen::Index m,
                             Eigen::Index n, double tau_m, std::int64_t cycles);

struct SuppressionReport {
    Matrix generator;           // joint-space, zero on diagonal blocks
    double norm_per_cycle = 0;  // max-abs of the generator over the cycle count
};

// Assembles the accumulated transition generator for every level pair coupled
// by the transition term.  A norm per cycle well below the largest transition
// element certifies suppression; at a critical window it saturates instead.
SuppressionReport transition_generator(const QndModel& model, double tau_m,
                                       std::int64_t cycles);

}  // namespace zeno
