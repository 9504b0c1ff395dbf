#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinbound {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Bad run configuration (unknown family, malformed grid, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inputs that violate an operation's preconditions (non-Hermitian matrix,
/// unknown site, region/support mismatch).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical failure: eigensolver non-convergence, exp overflow,
/// non-converging series tail.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Instance exceeds a configured resource limit (Hilbert dimension cap).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

/// Entrywise Hermiticity defect ||M - M^dagger||_max.
inline double hermiticity_defect(const Matrix& m) {
  return max_abs(m - m.adjoint());
}

inline bool is_hermitian(const Matrix& m, double tol = 1e-10) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

/// True when every imaginary part is negligible; such matrices take the
/// real-symmetric LAPACK fast paths.
inline bool is_numerically_real(const Matrix& m, double tol = 1e-13) {
  return m.imag().cwiseAbs().maxCoeff() <= tol;
}

}  // namespace spinbound
