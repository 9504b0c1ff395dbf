#include "spinbound/linalg.hpp"

#include <string>

#define LAPACK_COMPLEX_CPP
#include <cblas.h>
#include <lapacke.h>

namespace spinbound {

namespace {

[[noreturn]] void lapack_failure(const char* routine, int info) {
  throw NumericError(std::string(routine) + " failed with info = " +
                     std::to_string(info) +
                     (info > 0 ? " (eigensolver did not converge)" : ""));
}

}  // namespace

void heev_inplace(RealMatrix& a, RealVector& eigenvalues) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  eigenvalues.resize(n);
  if (n == 0) return;
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                         a.data(), n, eigenvalues.data());
  if (info != 0) lapack_failure("dsyevd", static_cast<int>(info));
}

void heev_inplace(Matrix& a, RealVector& eigenvalues) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  eigenvalues.resize(n);
  if (n == 0) return;
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                     reinterpret_cast<lapack_complex_double*>(a.data()), n,
                     eigenvalues.data());
  if (info != 0) lapack_failure("zheevd", static_cast<int>(info));
}

RealVector heev_values(RealMatrix a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  RealVector w(n);
  if (n == 0) return w;
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, w.data());
  if (info != 0) lapack_failure("dsyevd", static_cast<int>(info));
  return w;
}

RealVector heev_values(Matrix a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  RealVector w(n);
  if (n == 0) return w;
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, 'N', 'L', n,
      reinterpret_cast<lapack_complex_double*>(a.data()), n, w.data());
  if (info != 0) lapack_failure("zheevd", static_cast<int>(info));
  return w;
}

RealMatrix gemm(const RealMatrix& a, const RealMatrix& b, bool adjoint_a,
                bool adjoint_b) {
  const auto m = adjoint_a ? a.cols() : a.rows();
  const auto k = adjoint_a ? a.rows() : a.cols();
  const auto kb = adjoint_b ? b.cols() : b.rows();
  const auto n = adjoint_b ? b.rows() : b.cols();
  if (k != kb) throw ValidationError("gemm: inner dimensions do not match");
  RealMatrix c(m, n);
  if (m == 0 || n == 0) return c;
  cblas_dgemm(CblasColMajor, adjoint_a ? CblasTrans : CblasNoTrans,
              adjoint_b ? CblasTrans : CblasNoTrans, static_cast<int>(m),
              static_cast<int>(n), static_cast<int>(k), 1.0, a.data(),
              static_cast<int>(a.rows()), b.data(),
              static_cast<int>(b.rows()), 0.0, c.data(),
              static_cast<int>(c.rows()));
  return c;
}

Matrix gemm(const Matrix& a, const Matrix& b, bool adjoint_a, bool adjoint_b) {
  const auto m = adjoint_a ? a.cols() : a.rows();
  const auto k = adjoint_a ? a.rows() : a.cols();
  const auto kb = adjoint_b ? b.cols() : b.rows();
  const auto n = adjoint_b ? b.rows() : b.cols();
  if (k != kb) throw ValidationError("gemm: inner dimensions do not match");
  Matrix c(m, n);
  if (m == 0 || n == 0) return c;
  const Complex one(1, 0), zero(0, 0);
  cblas_zgemm(CblasColMajor, adjoint_a ? CblasConjTrans : CblasNoTrans,
              adjoint_b ? CblasConjTrans : CblasNoTrans, static_cast<int>(m),
              static_cast<int>(n), static_cast<int>(k), &one, a.data(),
              static_cast<int>(a.rows()), b.data(),
              static_cast<int>(b.rows()), &zero, c.data(),
              static_cast<int>(c.rows()));
  return c;
}

}  // namespace spinbound
