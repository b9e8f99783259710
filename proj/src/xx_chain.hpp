// Hopping chain with a phase-imprinting measurement on one site, simulated at
// the one-body level through its correlation matrix.  The free dynamics is
// quadratic and the measurement multiplies single-site amplitudes by a pure
// phase, so the correlation matrix evolves in closed form: conjugation by the
// one-body propagator, then pointer phases on the monitored site's row and
// column.

#pragma once

#include <cstdint>
#include <vector>

#include "types.hpp"

namespace zeno {

enum class Boundary { Periodic, Open };

struct ChainConfig {
    std::int64_t sites = 0;    // L >= 2
    double omega = 0.0;        // uniform on-site energy
    double hopping = 0.0;      // bond amplitude
    Boundary boundary = Boundary::Periodic;

    void validate() const;
};

struct MeasurementConfig {
    double apparatus_eigenvalue = 0.0;  // pointer shift imprinted on site 0

    void validate() const;
};

// Site index carrying the measurement phases.
inline constexpr Eigen::Index kMonitoredSite = 0;

// One-body matrix: omega on the diagonal, the hopping amplitude on every
// bond, wrap bond included for periodic chains.  Bond terms accumulate, so
// the two-site ring carries a doubled bond.
Matrix hopping_matrix(const ChainConfig& cfg);

// Mode energy omega + 2 g cos(2 pi k / L).  Periodic chains only; the open
// chain has no translation modes and the call reports a boundary violation.
double dispersion(const ChainConfig& cfg, std::int64_t mode);

// One free step in the mode basis: transform, advance each mode pair by its
// energy difference, transform back.  Periodic chains only.
Matrix free_step_fourier(const Matrix& corr, const ChainConfig& cfg, double tau);

// One free step by conjugating with the one-body propagator.  Works for
// either boundary and must agree with the mode route on periodic chains.
Matrix free_step_direct(const Matrix& corr, const ChainConfig& cfg, double tau);

// One measurement window: multiplies the monitored site's row and column of
// the correlation matrix by conjugate pointer phases.  The diagonal — and
// with it every occupation number — is untouched; only coherences involving
// the monitored site rotate.
Matrix measure_step(const Matrix& corr, const MeasurementConfig& meas, double tau_m);

// Correlation matrix of one particle sitting on the given site.
Matrix localized_correlation(std::int64_t sites, std::int64_t site);

// Correlation matrix of a normalized one-particle wavefunction:
// entry (n, m) = conj(psi_n) * psi_m.
Matrix correlation_from_wavefunction(const Vector& psi);

// Physicality audit: Hermitian up to tol, eigenvalues inside [-tol, 1+tol],
// all entries finite.  Violations throw NumericDrift.
void check_correlation(const Matrix& corr, double tol);

// Full-cycle map on the row-major vectorized correlation matrix: one free
// step followed by one measurement window.  Unitary, so long traces can be
// advanced by matrix powers without drift.
Matrix cycle_superoperator(const ChainConfig& cfg, const MeasurementConfig& meas,
                           double tau, double tau_m);

// Critical windows 2 pi k / |pointer shift| for k = 1..max_winding.
std::vector<double> xx_critical_times(double apparatus_eigenvalue,
                                      std::int64_t max_winding);

// sqrt(1/p - 1): relative fluctuation of a single-site occupation with mean
// p; NaN when p is at or below the floor where the ratio is undefined.
double occupation_rel_fluctuation(double population);

}  // namespace zeno
