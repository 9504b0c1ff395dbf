#include "spinbound/truncation.hpp"

#include "spinbound/linalg.hpp"

namespace spinbound {

double clip_energy(double e, double tau) {
  if (std::abs(e - tau) <= 1e-9) return tau;
  return std::min(e, tau);
}

Matrix truncate_interior(const SpectralData& sd, double tau) {
  if (tau <= 0.0) throw ValidationError("truncate_interior: tau must be > 0");
  const Eigen::Index n = sd.dim();
  RealVector clipped(n);
  for (Eigen::Index i = 0; i < n; ++i)
    clipped(i) = clip_energy(sd.eigenvalues(i), tau);
  if (sd.is_real()) {
    RealMatrix scaled = sd.real_vecs;
    for (Eigen::Index j = 0; j < n; ++j) scaled.col(j) *= clipped(j);
    return gemm(scaled, sd.real_vecs, false, /*adjoint_b=*/true)
        .cast<Complex>();
  }
  Matrix scaled = sd.vectors();
  for (Eigen::Index j = 0; j < n; ++j) scaled.col(j) *= clipped(j);
  return gemm(scaled, sd.vectors(), false, /*adjoint_b=*/true);
}

}  // namespace spinbound
