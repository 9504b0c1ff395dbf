#include "spinbound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "spinbound/linalg.hpp"
#include "spinbound/rng.hpp"

namespace spinbound {

namespace {

constexpr double kClusterGap = 1e-9;
constexpr double kExpOverflow = 700.0;

std::mutex g_materialize_mutex;

/// Maximal run of near-degenerate eigenvalues containing index i
/// (consecutive gaps <= kClusterGap).
IndexRange cluster_around(const RealVector& ev, Eigen::Index i) {
  Eigen::Index a = i, b = i;
  while (a > 0 && ev(a) - ev(a - 1) <= kClusterGap) --a;
  while (b + 1 < ev.size() && ev(b + 1) - ev(b) <= kClusterGap) ++b;
  return {a, b + 1};
}

Eigen::Index lower_cut(const RealVector& ev, double lo) {
  const double* begin = ev.data();
  const double* end = ev.data() + ev.size();
  Eigen::Index cut = std::lower_bound(begin, end, lo - kIntervalTol) - begin;
  if (cut > 0 && cut < ev.size() && ev(cut) - ev(cut - 1) <= kClusterGap) {
    const auto cl = cluster_around(ev, cut);
    const double mid = 0.5 * (ev(cl.begin) + ev(cl.end - 1));
    cut = (mid >= lo - kIntervalTol) ? cl.begin : cl.end;
  }
  return cut;
}

Eigen::Index upper_cut(const RealVector& ev, double hi) {
  const double* begin = ev.data();
  const double* end = ev.data() + ev.size();
  Eigen::Index cut = std::upper_bound(begin, end, hi + kIntervalTol) - begin;
  if (cut > 0 && cut < ev.size() && ev(cut) - ev(cut - 1) <= kClusterGap) {
    const auto cl = cluster_around(ev, cut);
    const double mid = 0.5 * (ev(cl.begin) + ev(cl.end - 1));
    cut = (mid <= hi + kIntervalTol) ? cl.end : cl.begin;
  }
  return cut;
}

/// sigma_max via the smaller-side Gram matrix; exact for the largest
/// singular value and Eigen-only, so safe inside sweep threads.
template <typename Derived>
double gram_sigma_max(const Eigen::MatrixBase<Derived>& b) {
  using Plain = typename Derived::PlainObject;
  if (b.rows() == 0 || b.cols() == 0) return 0.0;
  Plain g;
  if (b.rows() <= b.cols())
    g.noalias() = b * b.adjoint();
  else
    g.noalias() = b.adjoint() * b;
  Eigen::SelfAdjointEigenSolver<Plain> solver(g, Eigen::EigenvaluesOnly);
  const double top = solver.eigenvalues()(g.rows() - 1);
  return std::sqrt(std::max(0.0, top));
}

/// Deterministic unit probe vectors for the post-eigensolve residual check.
Vector probe_vector(Eigen::Index n, std::uint64_t stream) {
  SplitMix64 rng(split_seed(0x5bd1e995u, stream));
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(rng.next_pm1(), rng.next_pm1());
  v /= v.norm();
  return v;
}

template <typename Mat>
void residual_probe(const Mat& m, const SpectralData& sd) {
  const Eigen::Index n = m.rows();
  if (n == 0) return;
  const double scale =
      std::max({1.0, std::abs(sd.eigenvalues(0)), std::abs(sd.eigenvalues(n - 1))});
  for (std::uint64_t p = 0; p < 3; ++p) {
    const Vector v = probe_vector(n, p);
    Vector rebuilt;
    if (sd.is_real()) {
      const Vector coeffs = sd.real_vecs.transpose().cast<Complex>() * v;
      rebuilt = sd.real_vecs.cast<Complex>() *
                (sd.eigenvalues.cast<Complex>().asDiagonal() * coeffs);
    } else {
      const Vector coeffs = sd.cplx_vecs.adjoint() * v;
      rebuilt = sd.cplx_vecs *
                (sd.eigenvalues.cast<Complex>().asDiagonal() * coeffs);
    }
    const double res = (m.template cast<Complex>() * v - rebuilt).norm();
    if (res > 1e-8 * scale * std::sqrt(static_cast<double>(n)))
      throw NumericError("diagonalize: residual probe failed for " +
                         sd.source_label);
  }
}

}  // namespace

IndexRange interval_range(const RealVector& ev, const EnergyInterval& I) {
  if (I.lo > I.hi) throw ValidationError("interval_range: lo > hi");
  IndexRange r;
  r.begin = std::isinf(I.lo) && I.lo < 0 ? 0 : lower_cut(ev, I.lo);
  r.end = std::isinf(I.hi) && I.hi > 0 ? ev.size() : upper_cut(ev, I.hi);
  if (r.end < r.begin) r.end = r.begin;
  return r;
}

const Matrix& SpectralData::vectors() const {
  if (cplx_vecs.size() == 0 && real_vecs.size() > 0) {
    std::lock_guard<std::mutex> lock(g_materialize_mutex);
    if (cplx_vecs.size() == 0) cplx_vecs = real_vecs.cast<Complex>();
  }
  return cplx_vecs;
}

SpectralData diagonalize(const RealMatrix& m, std::string source_label) {
  if (m.rows() != m.cols() ||
      (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw ValidationError("diagonalize: matrix is not symmetric (" +
                          source_label + ")");
  SpectralData sd;
  sd.source_label = std::move(source_label);
  sd.real_vecs = 0.5 * (m + m.transpose());
  heev_inplace(sd.real_vecs, sd.eigenvalues);
  residual_probe(m, sd);
  return sd;
}

SpectralData diagonalize(const Matrix& m, std::string source_label) {
  if (!is_hermitian(m))
    throw ValidationError("diagonalize: matrix is not Hermitian (" +
                          source_label + ")");
  if (is_numerically_real(m)) return diagonalize(RealMatrix(m.real()), std::move(source_label));
  SpectralData sd;
  sd.source_label = std::move(source_label);
  sd.cplx_vecs = 0.5 * (m + m.adjoint());
  heev_inplace(sd.cplx_vecs, sd.eigenvalues);
  residual_probe(m, sd);
  return sd;
}

Matrix projector(const SpectralData& sd, const EnergyInterval& interval) {
  const auto r = interval_range(sd.eigenvalues, interval);
  const Eigen::Index n = sd.dim();
  if (r.empty()) return Matrix::Zero(n, n);
  const auto block = sd.vectors().middleCols(r.begin, r.count());
  Matrix p(n, n);
  p.noalias() = block * block.adjoint();
  return p;
}

double operator_norm(const Matrix& m) { return gram_sigma_max(m); }
double operator_norm(const RealMatrix& m) { return gram_sigma_max(m); }

double sandwich_norm(const Matrix& p1, const Matrix& a, const Matrix& p2) {
  if (p1.cols() != a.rows() || a.cols() != p2.rows())
    throw ValidationError("sandwich_norm: dimension mismatch");
  const Matrix product = p1 * a * p2;
  return operator_norm(product);
}

Matrix conjugate(const SpectralData& sd, const Matrix& a, double s) {
  const Eigen::Index n = sd.dim();
  if (a.rows() != n || a.cols() != n)
    throw ValidationError("conjugate: operator dimension mismatch");
  const double spread = sd.max_energy() - sd.ground_energy();
  if (std::abs(s) * spread > kExpOverflow)
    throw NumericError(
        "conjugate: exp(s * spectral spread) overflows; use a smaller s");
  const Matrix& u = sd.vectors();
  Matrix b = gemm(gemm(u, a, /*adjoint_a=*/true), u);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      b(i, j) *= std::exp(s * (sd.eigenvalues(i) - sd.eigenvalues(j)));
  return gemm(gemm(u, b), u, false, /*adjoint_b=*/true);
}

double state_energy(const Matrix& h, const Vector& v) {
  const double nrm2 = v.squaredNorm();
  if (std::sqrt(nrm2) <= 1e-12)
    throw ValidationError("state_energy: vector norm is (near) zero");
  const Complex e = v.dot(h * v);
  return e.real() / nrm2;
}

TransitionMatrix::TransitionMatrix(RealVector row_evals, RealVector col_evals,
                                   RealMatrix t)
    : row_evals_(std::move(row_evals)),
      col_evals_(std::move(col_evals)),
      real_(std::move(t)) {}

TransitionMatrix::TransitionMatrix(RealVector row_evals, RealVector col_evals,
                                   Matrix t)
    : row_evals_(std::move(row_evals)),
      col_evals_(std::move(col_evals)),
      cplx_(std::move(t)) {}

double TransitionMatrix::block_norm(const EnergyInterval& rows,
                                    const EnergyInterval& cols) const {
  const auto r = interval_range(row_evals_, rows);
  const auto c = interval_range(col_evals_, cols);
  if (r.empty() || c.empty()) return 0.0;
  if (is_real())
    return gram_sigma_max(real_.block(r.begin, c.begin, r.count(), c.count()));
  return gram_sigma_max(cplx_.block(r.begin, c.begin, r.count(), c.count()));
}

double TransitionMatrix::conjugated_norm(double s) const {
  const double hi = std::max(std::abs(s * (row_evals_(row_evals_.size() - 1) -
                                           col_evals_(0))),
                             std::abs(s * (col_evals_(col_evals_.size() - 1) -
                                           row_evals_(0))));
  if (hi > kExpOverflow)
    throw NumericError(
        "conjugated_norm: exp(s * spectral spread) overflows; use a smaller s");
  const auto scale = [&](auto t) {
    for (Eigen::Index j = 0; j < t.cols(); ++j)
      for (Eigen::Index i = 0; i < t.rows(); ++i)
        t(i, j) *= std::exp(s * (row_evals_(i) - col_evals_(j)));
    return gram_sigma_max(t);
  };
  if (is_real()) return scale(RealMatrix(real_));
  return scale(Matrix(cplx_));
}

TransitionMatrix make_transition(const SpectralData& row_sd, const Matrix* a,
                                 const SpectralData& col_sd) {
  if (a && (a->rows() != row_sd.dim() || a->cols() != col_sd.dim()))
    throw ValidationError("make_transition: operator dimension mismatch");
  const bool real_path =
      row_sd.is_real() && col_sd.is_real() && (!a || is_numerically_real(*a));
  if (real_path) {
    RealMatrix t;
    if (a) {
      const RealMatrix ar = a->real();
      t = gemm(row_sd.real_vecs, gemm(ar, col_sd.real_vecs), true);
    } else {
      t = gemm(row_sd.real_vecs, col_sd.real_vecs, true);
    }
    return TransitionMatrix(row_sd.eigenvalues, col_sd.eigenvalues,
                            std::move(t));
  }
  const Matrix& ur = row_sd.vectors();
  const Matrix& uc = col_sd.vectors();
  Matrix t;
  if (a)
    t = gemm(ur, gemm(*a, uc), true);
  else
    t = gemm(ur, uc, true);
  return TransitionMatrix(row_sd.eigenvalues, col_sd.eigenvalues, std::move(t));
}

}  // namespace spinbound
