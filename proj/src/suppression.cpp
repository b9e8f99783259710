#include "suppression.hpp"

#include "resonance.hpp"

namespace zeno {

Matrix accumulated_phase_sum(const BlockSpectra& spectra, Eigen::Index m,
                             Eigen::Index n, double tau_m, std::int64_t cycles) {
    if (m < 0 || m >= spectra.level_count() || n < 0 || n >= spectra.level_count())
        fail(ErrorCode::InvalidArgument, "phase sum: level index out of range");
    if (cycles < 1)
        fail(ErrorCode::InvalidArgument, "phase sum: cycle count must be at least 1");
    if (tau_m < 0.0)
        fail(ErrorCode::InvalidArgument, "phase sum: window length must be nonnegative");

    const Eigen::Index dim = spectra.block_dim();
    const Matrix overlap = spectra.overlap(m, n);

    // In the two eigenbases each term is a pure phase, so the cycle sum is a
    // geometric series per eigenvector pair; the k = 1..cycles range shows up
    // as one extra phase factor on the k = 0..cycles-1 closed form.
    Matrix kernel(dim, dim);
    for (Eigen::Index a = 0; a < dim; ++a)
        for (Eigen::Index b = 0; b < dim; ++b) {
            const double gap = spectra.levels[m][a] - spectra.levels[n][b];
            kernel(a, b) = std::exp(Complex(0.0, -gap * tau_m)) *
                           geometric_phase_sum(gap * tau_m, cycles);
        }

    return spectra.bases[m] * kernel.cwiseProduct(overlap) * spectra.bases[n].adjoint();
}

SuppressionReport transition_generator(const QndModel& model, double tau_m,
                                       std::int64_t cycles) {
    model.validate();
    if (cycles < 1)
        fail(ErrorCode::InvalidArgument, "generator: cycle count must be at least 1");

    const BlockSpectra spectra = block_spectra(model);
    const Eigen::Index d_s = model.system_dim();
    const Eigen::Index d_e = model.apparatus_dim();

    SuppressionReport report;
    report.generator = Matrix::Zero(d_s * d_e, d_s * d_e);
    for (Eigen::Index m = 0; m < d_s; ++m)
        for (Eigen::Index n = 0; n < d_s; ++n) {
            if (m == n || model.transition(m, n) == Complex(0.0, 0.0)) continue;
            report.generator.block(m * d_e, n * d_e, d_e, d_e) =
                model.transition(m, n) *
                accumulated_phase_sum(spectra, m, n, tau_m, cycles);
        }

    report.norm_per_cycle = max_abs(report.generator) / static_cast<double>(cycles);
    return report;
}

}  // namespace zeno
