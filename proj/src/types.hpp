// Shared numeric types and error plumbing for the zeno library.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace zeno {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

enum class ErrorCode {
    InvalidArgument,
    NonHermitian,
    ConvergenceFailure,
    SizeLimit,
    NumericDrift,
    BoundaryViolation,
    ZeroEigenvalue,
};

class ZenoError : public std::runtime_error {
public:
    ZenoError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw ZenoError(code, message);
}

inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// ||M - M^dag||_max; zero for exactly Hermitian input.
inline double hermiticity_defect(const Matrix& m) {
    return max_abs(m - m.adjoint());
}

// ||U^dag U - I||_max
inline double unitarity_defect(const Matrix& u) {
    return max_abs(u.adjoint() * u - Matrix::Identity(u.cols(), u.cols()));
}

inline void require_finite(const Matrix& m, const char* name) {
    if (!m.allFinite())
        fail(ErrorCode::InvalidArgument, std::string(name) + ": non-finite entries");
}

inline void require_square(const Matrix& m, const char* name) {
    if (m.rows() != m.cols() || m.rows() < 1)
        fail(ErrorCode::InvalidArgument,
             std::string(name) + ": expected a nonempty square matrix");
}

Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace zeno
