// Spectral kernel: Hermitian eigendecomposition, unitary propagators, and
// integer matrix powers.  Everything downstream funnels its linear algebra
// through these three entry points so tolerances live in exactly one place.

#pragma once

#include <cstdint>

#include "types.hpp"

namespace zeno {

// Inputs whose Hermiticity defect exceeds this are rejected outright;
// anything below is symmetrized to (H + H^dag)/2 before decomposition.
inline constexpr double kHermitianTol = 1e-9;

// A propagator whose unitarity defect exceeds this indicates a failed
// decomposition rather than roundoff.
inline constexpr double kUnitaryTol = 1e-10;

struct SpectralDecomposition {
    RealVector eigenvalues;  // ascending
    Matrix eigenvectors;     // unitary; column j pairs with eigenvalues[j]
};

// Eigendecomposition of a Hermitian matrix.  Throws NonHermitian when the
// defect of H exceeds kHermitianTol and ConvergenceFailure when the solver
// does not converge.
SpectralDecomposition eig_hermitian(const Matrix& h);

// exp(-i H t) via the spectral route.  The result is checked against
// kUnitaryTol before being returned.
Matrix expm_unitary(const Matrix& h, double t);

// M^n by repeated squaring; n = 0 yields the identity.
Matrix matpow(const Matrix& m, std::uint64_t n);

}  // namespace zeno
