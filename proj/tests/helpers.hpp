// Shared fixtures for the unit tests: canonical small models and a helper for
// asserting typed failures.

#pragma once

#include <functional>
#include <optional>
#include <random>

#include "qnd_model.hpp"
#include "types.hpp"
#include "xx_chain.hpp"

namespace zeno::testing {

// Runs fn and reports the error code it threw, if any.
inline std::optional<ErrorCode> thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ZenoError& e) {
        return e.code();
    }
    return std::nullopt;
}

inline Matrix random_hermitian(Eigen::Index n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(dist(rng), dist(rng));
    return 0.5 * (a + a.adjoint());
}

// Two-level model with scalar apparatus blocks: levels at (omega, 0), the
// monitored observable projecting on level 0, a real transition amplitude g,
// and pointer energies (h0, h1).  This is the workhorse fixture — its free
// survival probability has a closed form, and the pointer gap h1 - h0 sets
// the critical windows.
inline QndModel two_level_model(double g, double omega, double h0, double h1) {
    QndModel model;
    model.level_energies = RealVector(2);
    model.level_energies << omega, 0.0;
    model.observable_diag = RealVector(2);
    model.observable_diag << 1.0, 0.0;
    model.transition = Matrix::Zero(2, 2);
    model.transition(0, 1) = g;
    model.transition(1, 0) = g;
    model.meas_blocks = {Matrix::Constant(1, 1, h0), Matrix::Constant(1, 1, h1)};
    model.system_state = Vector::Zero(2);
    model.system_state[0] = 1.0;
    model.apparatus_state = Vector::Ones(1);
    return model;
}

inline ChainConfig ring(std::int64_t sites, double hopping, double omega = 0.0) {
    ChainConfig cfg;
    cfg.sites = sites;
    cfg.hopping = hopping;
    cfg.omega = omega;
    cfg.boundary = Boundary::Periodic;
    return cfg;
}

// A valid random correlation matrix: unitary conjugation of occupations
// drawn from [0, 1].
inline Matrix random_correlation(Eigen::Index n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(random_hermitian(n, seed + 1));
    RealVector occ(n);
    for (Eigen::Index i = 0; i < n; ++i) occ[i] = dist(rng);
    return solver.eigenvectors() * occ.cast<Complex>().asDiagonal() *
           solver.eigenvectors().adjoint();
}

}  // namespace zeno::testing
