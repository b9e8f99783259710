#include "xx_chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "resonance.hpp"
#include "schedule.hpp"
#include "spectral.hpp"

namespace zeno {

void ChainConfig::validate() const {
    if (sites < 2)
        fail(ErrorCode::InvalidArgument, "chain: need at least two sites");
    if (!std::isfinite(omega) || !std::isfinite(hopping))
        fail(ErrorCode::InvalidArgument, "chain: non-finite parameters");
}

void MeasurementConfig::validate() const {
    if (!std::isfinite(apparatus_eigenvalue))
        fail(ErrorCode::InvalidArgument, "measurement: non-finite pointer shift");
}

Matrix hopping_matrix(const ChainConfig& cfg) {
    cfg.validate();
    const Eigen::Index n = cfg.sites;
    Matrix h = Matrix::Zero(n, n);
    h.diagonal().setConstant(cfg.omega);

    const Eigen::Index bonds = cfg.boundary == Boundary::Periodic ? n : n - 1;
    for (Eigen::Index b = 0; b < bonds; ++b) {
        const Eigen::Index i = b;
        const Eigen::Index j = (b + 1) % n;
        h(i, j) += cfg.hopping;
        h(j, i) += cfg.hopping;
    }
    return h;
}

double dispersion(const ChainConfig& cfg, std::int64_t mode) {
    cfg.validate();
    if (cfg.boundary != Boundary::Periodic)
        fail(ErrorCode::BoundaryViolation, "dispersion: open chain has no translation modes");
    if (mode < 0 || mode >= cfg.sites)
        fail(ErrorCode::InvalidArgument, "dispersion: mode index out of range");
    return cfg.omega + 2.0 * cfg.hopping *
                           std::cos(2.0 * M_PI * static_cast<double>(mode) /
                                    static_cast<double>(cfg.sites));
}

namespace {

void check_corr_shape(const Matrix& corr, const ChainConfig& cfg, const char* who) {
    if (corr.rows() != cfg.sites || corr.cols() != cfg.sites)
        fail(ErrorCode::InvalidArgument,
             std::string(who) + ": correlation matrix does not match the chain size");
}

// Columns are the translation modes, mode k at site n carrying
// exp(i 2 pi n k / L) / sqrt(L).
Matrix mode_transform(Eigen::Index n) {
    Matrix w(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index site = 0; site < n; ++site)
        for (Eigen::Index mode = 0; mode < n; ++mode)
            w(site, mode) = norm * std::exp(Complex(0.0, 2.0 * M_PI *
                                                             static_cast<double>(site) *
                                                             static_cast<double>(mode) /
                                                             static_cast<double>(n)));
    return w;
}

}  // namespace

Matrix free_step_fourier(const Matrix& corr, const ChainConfig& cfg, double tau) {
    cfg.validate();
    check_corr_shape(corr, cfg, "free step");
    if (cfg.boundary != Boundary::Periodic)
        fail(ErrorCode::BoundaryViolation, "free step: mode route needs a periodic chain");

    const Eigen::Index n = cfg.sites;
    const Matrix w = mode_transform(n);
    Matrix modes = w.adjoint() * corr * w;
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index q = 0; q < n; ++q)
            modes(k, q) *= std::exp(Complex(0.0, (dispersion(cfg, k) - dispersion(cfg, q)) * tau));
    return w * modes * w.adjoint();
}

Matrix free_step_direct(const Matrix& corr, const ChainConfig& cfg, double tau) {
    cfg.validate();
    check_corr_shape(corr, cfg, "free step");
    const Matrix u = expm_unitary(hopping_matrix(cfg), tau);
    return u.adjoint() * corr * u;
}

Matrix measure_step(const Matrix& corr, const MeasurementConfig& meas, double tau_m) {
    meas.validate();
    if (corr.rows() != corr.cols() || corr.rows() < 1)
        fail(ErrorCode::InvalidArgument, "measure step: expected a square matrix");
    if (tau_m < 0.0 || !std::isfinite(tau_m))
        fail(ErrorCode::InvalidArgument, "measure step: window length must be nonnegative");

    const Complex phase = std::exp(Complex(0.0, meas.apparatus_eigenvalue * tau_m));
    Matrix out = corr;
    for (Eigen::Index m = 0; m < out.cols(); ++m)
        if (m != kMonitoredSite) out(kMonitoredSite, m) *= phase;
    for (Eigen::Index n = 0; n < out.rows(); ++n)
        if (n != kMonitoredSite) out(n, kMonitoredSite) *= std::conj(phase);
    return out;
}

Matrix localized_correlation(std::int64_t sites, std::int64_t site) {
    if (sites < 1 || site < 0 || site >= sites)
        fail(ErrorCode::InvalidArgument, "correlation: site index out of range");
    Matrix c = Matrix::Zero(sites, sites);
    c(site, site) = 1.0;
    return c;
}

Matrix correlation_from_wavefunction(const Vector& psi) {
    if (psi.size() < 1)
        fail(ErrorCode::InvalidArgument, "correlation: empty wavefunction");
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        fail(ErrorCode::InvalidArgument, "correlation: wavefunction must be normalized");
    return psi.conjugate() * psi.transpose();
}

void check_correlation(const Matrix& corr, double tol) {
    if (corr.rows() != corr.cols() || corr.rows() < 1)
        fail(ErrorCode::NumericDrift, "correlation audit: not a square matrix");
    if (!corr.allFinite())
        fail(ErrorCode::NumericDrift, "correlation audit: non-finite entries");
    const double herm = hermiticity_defect(corr);
    if (herm > tol)
        fail(ErrorCode::NumericDrift,
             "correlation audit: Hermiticity defect " + std::to_string(herm));

    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (corr + corr.adjoint()));
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::ConvergenceFailure, "correlation audit: eigensolver failed");
    const double lo = solver.eigenvalues().minCoeff();
    const double hi = solver.eigenvalues().maxCoeff();
    if (lo < -tol || hi > 1.0 + tol)
        fail(ErrorCode::NumericDrift,
             "correlation audit: occupation spectrum [" + std::to_string(lo) + ", " +
                 std::to_string(hi) + "] escapes [0, 1]");
}

Matrix cycle_superoperator(const ChainConfig& cfg, const MeasurementConfig& meas,
                           double tau, double tau_m) {
    cfg.validate();
    meas.validate();
    const Eigen::Index n = cfg.sites;
    const Matrix u = expm_unitary(hopping_matrix(cfg), tau);
    const Complex phase = std::exp(Complex(0.0, meas.apparatus_eigenvalue * tau_m));

    // Row-major vectorization: entry (a, b) of the correlation matrix sits at
    // index a * L + b.  One cycle maps C to P .* (U^dag C U), so the kernel
    // element for target (a, b) and source (x, y) is p_ab conj(u_xa) u_yb.
    Matrix f(n * n, n * n);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) {
            Complex p(1.0, 0.0);
            if (a == kMonitoredSite && b != kMonitoredSite) p = phase;
            if (b == kMonitoredSite && a != kMonitoredSite) p = std::conj(phase);
            for (Eigen::Index x = 0; x < n; ++x)
                for (Eigen::Index y = 0; y < n; ++y)
                    f(a * n + b, x * n + y) = p * std::conj(u(x, a)) * u(y, b);
        }
    return f;
}

std::vector<double> xx_critical_times(double apparatus_eigenvalue,
                                      std::int64_t max_winding) {
    if (!std::isfinite(apparatus_eigenvalue))
        fail(ErrorCode::InvalidArgument, "critical: non-finite pointer shift");
    if (std::abs(apparatus_eigenvalue) < kDegenerateGapTol)
        fail(ErrorCode::ZeroEigenvalue,
             "critical: pointer shift is zero, no finite window rephases");
    if (max_winding < 1)
        fail(ErrorCode::InvalidArgument, "critical: winding bound must be at least 1");

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(max_winding));
    for (std::int64_t k = 1; k <= max_winding; ++k)
        out.push_back(2.0 * M_PI * static_cast<double>(k) /
                      std::abs(apparatus_eigenvalue));
    return out;
}

double occupation_rel_fluctuation(double population) {
    if (population <= kFluctuationFloor)
        return std::numeric_limits<double>::quiet_NaN();
    // Roundoff can leave a full occupation marginally above one; clamp so the
    // fluctuation degrades to zero instead of NaN.
    return std::sqrt(std::max(0.0, 1.0 / population - 1.0));
}

}  // namespace zeno
