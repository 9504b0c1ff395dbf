#pragma once

#include "spinbound/common.hpp"

namespace spinbound {

/// Dense Hermitian eigensolve (LAPACK divide-and-conquer). Input is copied;
/// eigenvalues come out ascending, eigenvectors as columns. Throws
/// NumericError when LAPACK fails to converge.
void heev_inplace(RealMatrix& a, RealVector& eigenvalues);
void heev_inplace(Matrix& a, RealVector& eigenvalues);

/// Eigenvalues only (no vectors).
RealVector heev_values(RealMatrix a);
RealVector heev_values(Matrix a);

/// C = op(A) * op(B) through BLAS. adjoint_a/adjoint_b request the
/// (conjugate) transpose of the factor. Intended for the serial phases;
/// BLAS threading is never tied to the sweep thread count.
RealMatrix gemm(const RealMatrix& a, const RealMatrix& b,
                bool adjoint_a = false, bool adjoint_b = false);
Matrix gemm(const Matrix& a, const Matrix& b, bool adjoint_a = false,
            bool adjoint_b = false);

}  // namespace spinbound
