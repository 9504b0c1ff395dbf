#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinbound/lattice.hpp"
#include "spinbound/terms.hpp"

namespace spinbound {

enum class ModelFamily { heisenberg, xy, tfim, random_klocal, lmg_longrange };

ModelFamily model_family_from_string(const std::string& name);
std::string to_string(ModelFamily family);

/// Model recipe. Random families are deterministic functions of `seed`.
struct ModelSpec {
  ModelFamily family = ModelFamily::heisenberg;
  int local_dim = 2;
  int k = 2;  // max bodies per term
  std::map<std::string, double> couplings;
  std::uint64_t seed = 0;

  double coupling(const std::string& name, double fallback) const {
    auto it = couplings.find(name);
    return it == couplings.end() ? fallback : it->second;
  }
};

/// Builds the interaction-term list for (lattice, spec). Pure and
/// deterministic: identical inputs give bit-identical terms. Matrices are
/// Hermitian but not yet PSD-shifted. Throws ConfigError for unsupported
/// family/lattice/local-dimension combinations.
///
/// Families:
///   heisenberg     S.S on every bond (d = 2 or 3), coupling "J" (default 1).
///   xy             Jx SxSx + Jy SySy on every bond (d = 2 or 3),
///                  couplings "Jx","Jy" (default 1).
///   tfim           J ZZ on bonds plus transverse field h X per site (d = 2),
///                  couplings "J" (default 1), "h" (default 1).
///   random_klocal  per contiguous k-site window (bonds for k = 2), Hermitian
///                  combination of the real two-site Pauli strings
///                  {XI,IX,ZI,IZ,XX,YY,ZZ,XZ,ZX} with coefficients uniform on
///                  [-1,1) drawn from SplitMix64 streams split per term
///                  index (d = 2, k = 2).
///   lmg_longrange  all-pair (Jx SxSx + Jy SySy) / (N-1) (d = 2); the 1/(N-1)
///                  keeps the per-site interaction weight g of order one.
std::vector<InteractionTerm> generate_terms(const Lattice& lattice,
                                            const ModelSpec& spec);

}  // namespace spinbound
