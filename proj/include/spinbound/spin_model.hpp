#pragma once

#include <cstdint>
#include <vector>

#include "spinbound/lattice.hpp"
#include "spinbound/terms.hpp"

namespace spinbound {

/// Hilbert-space dimension cap for dense assembly. Default 16384, overridable
/// via the SPINBOUND_DIM_CAP environment variable.
std::int64_t default_dim_cap();

/// A fully normalized spin model: every term PSD-shifted with cached norm,
/// plus the derived structural constants. Immutable after build; safe to
/// share across threads.
struct SpinModel {
  Lattice lattice;
  std::vector<InteractionTerm> terms;  // PSD-shifted
  int local_dim = 2;
  int k = 2;
  double g = 0.0;       // max over sites of the summed norms of touching terms
  double lambda = 0.0;  // 1 / (2 g k)
  std::int64_t hilbert_dim = 0;

  /// Normalizes raw Hermitian terms (PSD shift, cached norms) and computes
  /// g, lambda, d^N. Throws ResourceError when d^N exceeds the cap.
  static SpinModel build(Lattice lattice, std::vector<InteractionTerm> raw,
                         int local_dim, int k,
                         std::int64_t dim_cap = default_dim_cap());
};

/// Tightest admissible g: max over sites i of sum_{X owns i} ||h_X||.
double compute_g(const std::vector<InteractionTerm>& terms, int num_sites);

/// 1/(2gk). Throws ValidationError for g <= 0 or k < 1.
double compute_lambda(double g, int k);

/// Dense assembly H = sum of embedded terms (full d^N dimension).
Matrix assemble(const SpinModel& model);

/// Assembly of a subset of terms on the full space.
Matrix assemble_terms(const SpinModel& model,
                      const std::vector<int>& term_indices);

/// Assembly of a subset of terms on the Hilbert space of `sites` only
/// (dimension d^|sites|). Every term support must lie inside `sites`.
Matrix assemble_on_sites(const SpinModel& model,
                         const std::vector<int>& term_indices,
                         const std::vector<int>& sites);

}  // namespace spinbound
