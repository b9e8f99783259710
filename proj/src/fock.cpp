#include "fock.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "engine.hpp"
#include "spectral.hpp"

namespace zeno {

namespace {

void check_many_body_size(const ChainConfig& cfg) {
    if (cfg.sites > kMaxManyBodySites)
        fail(ErrorCode::SizeLimit,
             "many-body: " + std::to_string(cfg.sites) + " sites exceed the cap of " +
                 std::to_string(kMaxManyBodySites));
}

// Parity of the occupied sites strictly below `site` in `state`: +1 or -1.
double jordan_sign(std::uint32_t state, int site) {
    const std::uint32_t below = state & ((1u << site) - 1u);
    return (std::popcount(below) & 1) ? -1.0 : 1.0;
}

}  // namespace

Matrix fock_hamiltonian(const ChainConfig& cfg) {
    cfg.validate();
    check_many_body_size(cfg);

    const int sites = static_cast<int>(cfg.sites);
    const std::uint32_t dim = 1u << sites;
    Matrix h = Matrix::Zero(dim, dim);

    std::vector<std::pair<int, int>> bonds;
    const int bond_count = cfg.boundary == Boundary::Periodic ? sites : sites - 1;
    for (int b = 0; b < bond_count; ++b) bonds.emplace_back(b, (b + 1) % sites);

    for (std::uint32_t s = 0; s < dim; ++s) {
        h(s, s) = cfg.omega * static_cast<double>(std::popcount(s));
        for (const auto& [i, j] : bonds) {
            // Hop in both directions across the bond; the loop over all basis
            // states fills the Hermitian partner entries symmetrically.
            for (const auto& [from, to] : {std::pair(i, j), std::pair(j, i)}) {
                if (!(s & (1u << from)) || (s & (1u << to))) continue;
                const std::uint32_t mid = s & ~(1u << from);
                const std::uint32_t dst = mid | (1u << to);
                const double sign = jordan_sign(s, from) * jordan_sign(mid, to);
                h(dst, s) += cfg.hopping * sign;
            }
        }
    }
    return h;
}

namespace detail {

ZenoTrace fock_simulate_signed(const ChainConfig& cfg, const MeasurementConfig& meas,
                               const ZenoSchedule& sched, std::uint32_t initial_occupation,
                               double phase_sign) {
    cfg.validate();
    meas.validate();
    sched.validate();
    check_many_body_size(cfg);
    const std::uint32_t dim = 1u << static_cast<int>(cfg.sites);
    if (initial_occupation >= dim)
        fail(ErrorCode::InvalidArgument, "many-body: occupation mask exceeds the chain");

    const Matrix u = expm_unitary(fock_hamiltonian(cfg), sched.tau());

    // The measurement multiplies each basis state by the pointer phase once
    // per particle on the monitored site; with one bit per site that is a
    // two-value diagonal.
    const Complex monitored_phase = std::exp(
        Complex(0.0, phase_sign * meas.apparatus_eigenvalue * sched.tau_m));

    Vector psi = Vector::Zero(dim);
    psi[initial_occupation] = 1.0;

    const auto population = [dim](const Vector& state) {
        double p = 0.0;
        for (std::uint32_t s = 0; s < dim; ++s)
            if (s & 1u) p += std::norm(state[s]);
        return p;
    };

    ZenoTrace trace;
    double p = population(psi);
    push_trace_row(trace, p, p * (1.0 - p));

    for (std::int64_t k = 1; k <= sched.steps; ++k) {
        psi = u * psi;
        for (std::uint32_t s = 0; s < dim; ++s)
            if (s & 1u) psi[s] *= monitored_phase;

        const double drift = std::abs(psi.norm() - 1.0);
        if (drift > kDriftTol)
            fail(ErrorCode::NumericDrift,
                 "many-body: state norm drifted by " + std::to_string(drift));
        p = population(psi);
        push_trace_row(trace, p, p * (1.0 - p));
    }
    return trace;
}

}  // namespace detail

ZenoTrace fock_simulate(const ChainConfig& cfg, const MeasurementConfig& meas,
                        const ZenoSchedule& sched, std::uint32_t initial_occupation) {
    return detail::fock_simulate_signed(cfg, meas, sched, initial_occupation, -1.0);
}

ZenoTrace single_particle_simulate(const ChainConfig& cfg, const MeasurementConfig& meas,
                                   const ZenoSchedule& sched, std::int64_t start_site) {
    cfg.validate();
    meas.validate();
    sched.validate();
    if (start_site < 0 || start_site >= cfg.sites)
        fail(ErrorCode::InvalidArgument, "single particle: start site out of range");

    const Matrix u = expm_unitary(hopping_matrix(cfg), sched.tau());
    const Complex monitored_phase =
        std::exp(Complex(0.0, -meas.apparatus_eigenvalue * sched.tau_m));

    Vector psi = Vector::Zero(cfg.sites);
    psi[start_site] = 1.0;

    ZenoTrace trace;
    double p = std::norm(psi[kMonitoredSite]);
    push_trace_row(trace, p, p * (1.0 - p));

    for (std::int64_t k = 1; k <= sched.steps; ++k) {
        psi = u * psi;
        psi[kMonitoredSite] *= monitored_phase;

        const double drift = std::abs(psi.norm() - 1.0);
        if (drift > kDriftTol)
            fail(ErrorCode::NumericDrift,
                 "single particle: state norm drifted by " + std::to_string(drift));
        p = std::norm(psi[kMonitoredSite]);
        push_trace_row(trace, p, p * (1.0 - p));
    }
    return trace;
}

}  // namespace zeno
