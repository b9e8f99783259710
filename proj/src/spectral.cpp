#include "spectral.hpp"

#include <string>

namespace zeno {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

SpectralDecomposition eig_hermitian(const Matrix& h) {
    require_square(h, "eig_hermitian");
    require_finite(h, "eig_hermitian");

    const double defect = hermiticity_defect(h);
    if (defect > kHermitianTol)
        fail(ErrorCode::NonHermitian,
             "eig_hermitian: Hermiticity defect " + std::to_string(defect) +
                 " exceeds tolerance");

    // Symmetrize so the solver sees an exactly Hermitian operator even when
    // the caller accumulated roundoff below the tolerance.
    const Matrix sym = 0.5 * (h + h.adjoint());

    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::ConvergenceFailure, "eig_hermitian: solver did not converge");

    return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix expm_unitary(const Matrix& h, double t) {
    const SpectralDecomposition es = eig_hermitian(h);

    Vector phases(es.eigenvalues.size());
    for (Eigen::Index j = 0; j < es.eigenvalues.size(); ++j)
        phases[j] = std::exp(Complex(0.0, -es.eigenvalues[j] * t));

    Matrix u = es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint();

    const double defect = unitarity_defect(u);
    if (defect > kUnitaryTol)
        fail(ErrorCode::NumericDrift,
             "expm_unitary: unitarity defect " + std::to_string(defect) +
                 " exceeds tolerance");
    return u;
}

Matrix matpow(const Matrix& m, std::uint64_t n) {
    require_square(m, "matpow");
    require_finite(m, "matpow");

    Matrix result = Matrix::Identity(m.rows(), m.cols());
    Matrix base = m;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

}  // namespace zeno
