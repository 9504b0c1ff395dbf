#pragma once

#include <limits>
#include <string>

#include "spinbound/common.hpp"

namespace spinbound {

/// Closed interval of energies; either end may be infinite. Membership tests
/// use an absolute tolerance of 1e-9 at finite endpoints, and a degenerate
/// cluster of eigenvalues straddling an endpoint goes entirely to the side
/// its midpoint falls on (the spectrum is treated as exact, floating point
/// is not).
struct EnergyInterval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  static EnergyInterval all() { return {}; }
  static EnergyInterval up_to(double e) {
    return {-std::numeric_limits<double>::infinity(), e};
  }
  static EnergyInterval from(double e) {
    return {e, std::numeric_limits<double>::infinity()};
  }
  static EnergyInterval between(double lo, double hi) { return {lo, hi}; }
};

constexpr double kIntervalTol = 1e-9;

/// Index range [begin, end) of ascending eigenvalues inside an interval.
struct IndexRange {
  Eigen::Index begin = 0;
  Eigen::Index end = 0;
  Eigen::Index count() const { return end - begin; }
  bool empty() const { return end <= begin; }
};

IndexRange interval_range(const RealVector& eigenvalues,
                          const EnergyInterval& interval);

/// Full eigendecomposition of a Hermitian operator. Eigenvalues ascend;
/// eigenvectors are the columns of a unitary. Real-symmetric sources keep
/// their eigenvectors in `real_vecs` and the complex view is materialized on
/// first use (thread-safe); complex sources fill `cplx_vecs` directly.
struct SpectralData {
  RealVector eigenvalues;
  std::string source_label;
  RealMatrix real_vecs;
  mutable Matrix cplx_vecs;

  Eigen::Index dim() const { return eigenvalues.size(); }
  bool is_real() const { return real_vecs.size() > 0; }
  double ground_energy() const { return eigenvalues(0); }
  double max_energy() const { return eigenvalues(dim() - 1); }

  /// Complex eigenvector matrix (materialized from the real one if needed).
  const Matrix& vectors() const;
};

/// Exact diagonalization. Validates Hermiticity (1e-10), runs the LAPACK
/// divide-and-conquer solver (real path for numerically real input), and
/// probes the residual ||M v - U diag(e) U^dag v|| on a few fixed random
/// vectors as a convergence check.
SpectralData diagonalize(const Matrix& m, std::string source_label);
SpectralData diagonalize(const RealMatrix& m, std::string source_label);

/// Orthogonal projector onto the eigenspaces with eigenvalues in `interval`.
Matrix projector(const SpectralData& sd, const EnergyInterval& interval);

/// Largest singular value.
double operator_norm(const Matrix& m);
double operator_norm(const RealMatrix& m);

/// Operator norm of P1 * A * P2 (the explicit product).
double sandwich_norm(const Matrix& p1, const Matrix& a, const Matrix& p2);

/// e^{sH} A e^{-sH} where H is the diagonalized source. Exact in the
/// eigenbasis: U [e^{s(e_i - e_j)} (U^dag A U)_{ij}] U^dag. Throws
/// NumericError when e^{s * spectral_spread} would overflow. Serial phases
/// only (uses BLAS).
Matrix conjugate(const SpectralData& sd, const Matrix& a, double s);

/// Rayleigh quotient <v|H|v> / <v|v>. Throws for ||v|| <= 1e-12.
double state_energy(const Matrix& h, const Vector& v);

/// The measurement kernel behind every bound sweep: T = U_row^dag A U_col
/// for two diagonalized operators. ||Pi_rows A Pi_cols|| is the largest
/// singular value of the contiguous block of T selected by the two
/// intervals, so one matrix product paid up front turns every grid point
/// into a small dense norm. block_norm uses only Eigen internally and is
/// safe to call concurrently.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  TransitionMatrix(RealVector row_evals, RealVector col_evals, RealMatrix t);
  TransitionMatrix(RealVector row_evals, RealVector col_evals, Matrix t);

  bool is_real() const { return real_.size() > 0; }
  const RealVector& row_eigenvalues() const { return row_evals_; }
  const RealVector& col_eigenvalues() const { return col_evals_; }

  /// || block of T with row eigenvalues in `rows`, column eigenvalues in
  /// `cols` ||; zero for empty selections.
  double block_norm(const EnergyInterval& rows,
                    const EnergyInterval& cols) const;

  /// || e^{s L_row} T e^{-s L_col} || with L the eigenvalue diagonals; the
  /// norm of the conjugated operator when T was built in one eigenbasis.
  double conjugated_norm(double s) const;

 private:
  RealVector row_evals_, col_evals_;
  RealMatrix real_;
  Matrix cplx_;
};

/// T = U_row^dag A U_col; pass A = nullptr for the pure overlap
/// U_row^dag U_col. Real inputs take the dgemm path. Serial phases only.
TransitionMatrix make_transition(const SpectralData& row_sd, const Matrix* a,
                                 const SpectralData& col_sd);

}  // namespace spinbound
