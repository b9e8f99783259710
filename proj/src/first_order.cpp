#include "first_order.hpp"

#include "resonance.hpp"

namespace zeno {

Matrix transition_commutator(const QndModel& model) {
    model.validate();
    const Eigen::Index d_s = model.system_dim();
    Matrix out = Matrix::Zero(d_s, d_s);
    for (Eigen::Index n = 0; n < d_s; ++n)
        for (Eigen::Index l = 0; l < d_s; ++l)
            out(n, l) = (model.observable_diag[n] - model.observable_diag[l]) *
                        model.transition(n, l);
    return out;
}

Matrix first_order_heisenberg(const QndModel& model, const ZenoSchedule& sched) {
    sched.validate();
    const BlockSpectra spectra = block_spectra(model);
    const Eigen::Index d_s = model.system_dim();
    const Eigen::Index d_e = model.apparatus_dim();
    const Matrix commutator = transition_commutator(model);
    const double tau = sched.tau();

    // Zeroth order: the observable itself, untouched on every diagonal block.
    Matrix result = Matrix::Zero(d_s * d_e, d_s * d_e);
    for (Eigen::Index n = 0; n < d_s; ++n)
        result.block(n * d_e, n * d_e, d_e, d_e) =
            model.observable_diag[n] * Matrix::Identity(d_e, d_e);

    // First order: block (n, l) accumulates the commutator element times the
    // geometric phase kernel between the two apparatus spectra, expressed in
    // each block's own eigenbasis.
    for (Eigen::Index n = 0; n < d_s; ++n) {
        for (Eigen::Index l = 0; l < d_s; ++l) {
            if (n == l || commutator(n, l) == Complex(0.0, 0.0)) continue;

            const Matrix overlap = spectra.overlap(n, l);  // (beta, alpha)
            Matrix kernel(d_e, d_e);
            for (Eigen::Index beta = 0; beta < d_e; ++beta)
                for (Eigen::Index alpha = 0; alpha < d_e; ++alpha) {
                    const double gap =
                        spectra.levels[l][alpha] - spectra.levels[n][beta];
                    kernel(beta, alpha) =
                        geometric_phase_sum(gap * sched.tau_m, sched.steps);
                }

            result.block(n * d_e, l * d_e, d_e, d_e) +=
                Complex(0.0, -tau) * commutator(n, l) *
                (spectra.bases[n] * kernel.cwiseProduct(overlap) *
                 spectra.bases[l].adjoint());
        }
    }
    return result;
}

}  // namespace zeno
