#include "engine.hpp"

#include <cmath>
#include <string>

namespace zeno {

Moments observable_moments(const Vector& psi, const RealVector& diagonal) {
    if (psi.size() != diagonal.size())
        fail(ErrorCode::InvalidArgument, "moments: state/observable size mismatch");

    double first = 0.0, second = 0.0;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        const double weight = std::norm(psi[i]);
        first += weight * diagonal[i];
        second += weight * diagonal[i] * diagonal[i];
    }
    return Moments{first, second - first * first};
}

RealVector joint_observable_diag(const QndModel& model) {
    const Eigen::Index d_e = model.apparatus_dim();
    RealVector diag(model.joint_dim());
    for (Eigen::Index n = 0; n < model.system_dim(); ++n)
        diag.segment(n * d_e, d_e).setConstant(model.observable_diag[n]);
    return diag;
}

Vector joint_initial_state(const QndModel& model) {
    const Eigen::Index d_e = model.apparatus_dim();
    Vector psi(model.joint_dim());
    for (Eigen::Index n = 0; n < model.system_dim(); ++n)
        psi.segment(n * d_e, d_e) = model.system_state[n] * model.apparatus_state;
    return psi;
}

ZenoTrace evolve_exact(const QndModel& model, const ZenoSchedule& sched) {
    sched.validate();
    const auto [free_h, meas_h] = joint_hamiltonians(model);
    const Matrix free_u = expm_unitary(free_h, sched.tau());
    const Matrix meas_u = expm_unitary(meas_h, sched.tau_m);
    const RealVector diag = joint_observable_diag(model);

    Vector psi = joint_initial_state(model);
    ZenoTrace trace;
    const Moments start = observable_moments(psi, diag);
    push_trace_row(trace, start.expectation, start.variance);

    for (std::int64_t k = 1; k <= sched.steps; ++k) {
        psi = meas_u * (free_u * psi);
        const double drift = std::abs(psi.norm() - 1.0);
        if (drift > kDriftTol)
            fail(ErrorCode::NumericDrift,
                 "evolve: state norm drifted by " + std::to_string(drift) +
                     " at cycle " + std::to_string(k));
        const Moments m = observable_moments(psi, diag);
        push_trace_row(trace, m.expectation, m.variance);
    }
    return trace;
}

Matrix heisenberg_observable(const QndModel& model, const ZenoSchedule& sched) {
    sched.validate();
    const auto [free_h, meas_h] = joint_hamiltonians(model);
    const Matrix cycle = expm_unitary(meas_h, sched.tau_m) * expm_unitary(free_h, sched.tau());
    const Matrix total = matpow(cycle, static_cast<std::uint64_t>(sched.steps));

    const RealVector diag = joint_observable_diag(model);
    const Matrix observable = Matrix(diag.cast<Complex>().asDiagonal());
    return total.adjoint() * observable * total;
}

}  // namespace zeno
