// Resonance arithmetic shared by the first-order expansion, the critical-time
// enumeration, and the suppression certificate: one closed-form geometric
// phase sum and the two tolerances that define "resonant" and "degenerate".

#pragma once

#include <cmath>
#include <cstdint>

#include "types.hpp"

namespace zeno {

// |sin(gap * tau_m / 2)| below this counts as an exact resonance.
inline constexpr double kSinZeroTol = 1e-9;

// Eigenvalue gaps below this are treated as exact degeneracies; they never
// produce a critical window because no phase accumulates across them.
inline constexpr double kDegenerateGapTol = 1e-12;

// Sum_{k=0}^{count-1} exp(-i k theta) in closed form:
//   sin(count*theta/2) / sin(theta/2) * exp(-i (count-1) theta / 2),
// with the resonant limit `count` when the denominator vanishes.
inline Complex geometric_phase_sum(double theta, std::int64_t count) {
    const double half = 0.5 * theta;
    const double denom = std::sin(half);
    if (std::abs(denom) < kSinZeroTol)
        return Complex(static_cast<double>(count), 0.0);
    const double ratio = std::sin(static_cast<double>(count) * half) / denom;
    return ratio * std::exp(Complex(0.0, -half * static_cast<double>(count - 1)));
}

}  // namespace zeno
