#include "qnd_model.hpp"

#include <cmath>
#include <string>

namespace zeno {

void QndModel::validate() const {
    const Eigen::Index d_s = system_dim();
    if (d_s < 2)
        fail(ErrorCode::InvalidArgument, "model: need at least two system levels");
    if (observable_diag.size() != d_s)
        fail(ErrorCode::InvalidArgument, "model: observable diagonal has wrong length");
    if (transition.rows() != d_s || transition.cols() != d_s)
        fail(ErrorCode::InvalidArgument, "model: transition term has wrong shape");
    if (hermiticity_defect(transition) > kHermitianTol)
        fail(ErrorCode::NonHermitian, "model: transition term is not Hermitian");

    if (meas_blocks.size() != static_cast<std::size_t>(d_s))
        fail(ErrorCode::InvalidArgument, "model: expected one apparatus block per level");
    const Eigen::Index d_e = apparatus_dim();
    if (d_e < 1)
        fail(ErrorCode::InvalidArgument, "model: apparatus dimension must be positive");
    for (std::size_t n = 0; n < meas_blocks.size(); ++n) {
        const Matrix& block = meas_blocks[n];
        if (block.rows() != d_e || block.cols() != d_e)
            fail(ErrorCode::InvalidArgument,
                 "model: apparatus block " + std::to_string(n) + " has wrong shape");
        if (hermiticity_defect(block) > kHermitianTol)
            fail(ErrorCode::NonHermitian,
                 "model: apparatus block " + std::to_string(n) + " is not Hermitian");
    }

    if (system_state.size() != d_s || apparatus_state.size() != d_e)
        fail(ErrorCode::InvalidArgument, "model: initial state has wrong length");
    if (!system_state.allFinite() || !apparatus_state.allFinite() ||
        !level_energies.allFinite() || !observable_diag.allFinite())
        fail(ErrorCode::InvalidArgument, "model: non-finite entries");
    if (std::abs(system_state.norm() - 1.0) > 1e-10 ||
        std::abs(apparatus_state.norm() - 1.0) > 1e-10)
        fail(ErrorCode::InvalidArgument, "model: initial states must be normalized");
}

bool QndModel::measurement_coupled() const {
    for (std::size_t n = 1; n < meas_blocks.size(); ++n)
        if (max_abs(meas_blocks[n] - meas_blocks.front()) > 0.0) return true;
    return false;
}

Matrix BlockSpectra::overlap(Eigen::Index n, Eigen::Index l) const {
    return bases.at(n).adjoint() * bases.at(l);
}

BlockSpectra BlockSpectra::from_eigenvalues(const std::vector<std::vector<double>>& values) {
    if (values.empty())
        fail(ErrorCode::InvalidArgument, "block spectra: no levels given");
    const std::size_t dim = values.front().size();
    if (dim == 0)
        fail(ErrorCode::InvalidArgument, "block spectra: empty block");

    BlockSpectra out;
    for (const auto& level : values) {
        if (level.size() != dim)
            fail(ErrorCode::InvalidArgument, "block spectra: ragged block sizes");
        RealVector eigenvalues(static_cast<Eigen::Index>(dim));
        for (std::size_t j = 0; j < dim; ++j) {
            if (!std::isfinite(level[j]))
                fail(ErrorCode::InvalidArgument, "block spectra: non-finite eigenvalue");
            eigenvalues[static_cast<Eigen::Index>(j)] = level[j];
        }
        out.levels.push_back(std::move(eigenvalues));
        out.bases.push_back(Matrix::Identity(dim, dim));
    }
    return out;
}

BlockSpectra block_spectra(const QndModel& model) {
    model.validate();
    BlockSpectra out;
    for (const Matrix& block : model.meas_blocks) {
        SpectralDecomposition es = eig_hermitian(block);
        out.levels.push_back(std::move(es.eigenvalues));
        out.bases.push_back(std::move(es.eigenvectors));
    }
    return out;
}

std::pair<Matrix, Matrix> joint_hamiltonians(const QndModel& model) {
    model.validate();
    const Eigen::Index d_s = model.system_dim();
    const Eigen::Index d_e = model.apparatus_dim();

    Matrix system_term = model.transition;
    system_term += Matrix(model.level_energies.cast<Complex>().asDiagonal());
    Matrix free_h = kron(system_term, Matrix::Identity(d_e, d_e));

    Matrix meas_h = Matrix::Zero(d_s * d_e, d_s * d_e);
    for (Eigen::Index n = 0; n < d_s; ++n)
        meas_h.block(n * d_e, n * d_e, d_e, d_e) = model.meas_blocks[n];

    return {std::move(free_h), std::move(meas_h)};
}

}  // namespace zeno
