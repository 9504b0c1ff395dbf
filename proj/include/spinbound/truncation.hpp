#pragma once

#include "spinbound/spectral.hpp"

namespace spinbound {

/// H~_L: the interior Hamiltonian with eigenvalues clipped at tau
/// (eigenvectors untouched). Eigenvalues within 1e-9 of tau snap to tau;
/// the half-open split at exactly tau yields value tau either way, so the
/// snap is value-preserving. Throws for tau <= 0.
Matrix truncate_interior(const SpectralData& sd_interior, double tau);

/// Eigenvalue clip used by truncate_interior, exposed for spectrum-side
/// computations: min(e, tau) with the 1e-9 snap.
double clip_energy(double e, double tau);

}  // namespace spinbound
