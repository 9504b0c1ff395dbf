#include "spinbound/models.hpp"

#include <array>

#include "spinbound/rng.hpp"
#include "spinbound/spin_ops.hpp"

namespace spinbound {

ModelFamily model_family_from_string(const std::string& name) {
  if (name == "heisenberg") return ModelFamily::heisenberg;
  if (name == "xy") return ModelFamily::xy;
  if (name == "tfim") return ModelFamily::tfim;
  if (name == "random_klocal") return ModelFamily::random_klocal;
  if (name == "lmg_longrange") return ModelFamily::lmg_longrange;
  throw ConfigError("unknown model family: " + name);
}

std::string to_string(ModelFamily family) {
  switch (family) {
    case ModelFamily::heisenberg: return "heisenberg";
    case ModelFamily::xy: return "xy";
    case ModelFamily::tfim: return "tfim";
    case ModelFamily::random_klocal: return "random_klocal";
    case ModelFamily::lmg_longrange: return "lmg_longrange";
  }
  return "?";
}

namespace {

InteractionTerm bond_term(int i, int j, const Matrix& m) {
  InteractionTerm t;
  t.support = {std::min(i, j), std::max(i, j)};
  t.matrix = m;
  return t;
}

Matrix heisenberg_bond(int d, double j_coupling) {
  return j_coupling * (kron(spin_x(d), spin_x(d)) + kron(spin_y(d), spin_y(d)) +
                       kron(spin_z(d), spin_z(d)));
}

Matrix xy_bond(int d, double jx, double jy) {
  return jx * kron(spin_x(d), spin_x(d)) + jy * kron(spin_y(d), spin_y(d));
}

/// The 9 real-symmetric two-site Pauli strings. Coefficients on these span
/// every time-reversal-invariant two-spin coupling and keep the assembled
/// Hamiltonian real symmetric.
const std::array<Matrix, 9>& real_pauli_strings() {
  static const std::array<Matrix, 9> strings = [] {
    const Matrix id = pauli(0), x = pauli(1), y = pauli(2), z = pauli(3);
    return std::array<Matrix, 9>{kron(x, id), kron(id, x), kron(z, id),
                                 kron(id, z), kron(x, x),  kron(y, y),
                                 kron(z, z),  kron(x, z),  kron(z, x)};
  }();
  return strings;
}

Matrix random_bond(std::uint64_t term_seed) {
  SplitMix64 rng(term_seed);
  Matrix m = Matrix::Zero(4, 4);
  for (const auto& s : real_pauli_strings()) m += rng.next_pm1() * s;
  return m;
}

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

}  // namespace

std::vector<InteractionTerm> generate_terms(const Lattice& lattice,
                                            const ModelSpec& spec) {
  require(spec.local_dim >= 2, "local_dim must be >= 2");
  require(spec.k >= 2, "k must be >= 2");
  const int d = spec.local_dim;
  std::vector<InteractionTerm> terms;

  switch (spec.family) {
    case ModelFamily::heisenberg: {
      require(d == 2 || d == 3, "heisenberg: local_dim must be 2 or 3");
      const Matrix m = heisenberg_bond(d, spec.coupling("J", 1.0));
      for (auto [i, j] : lattice.bonds()) terms.push_back(bond_term(i, j, m));
      break;
    }
    case ModelFamily::xy: {
      require(d == 2 || d == 3, "xy: local_dim must be 2 or 3");
      const Matrix m =
          xy_bond(d, spec.coupling("Jx", 1.0), spec.coupling("Jy", 1.0));
      for (auto [i, j] : lattice.bonds()) terms.push_back(bond_term(i, j, m));
      break;
    }
    case ModelFamily::tfim: {
      require(d == 2, "tfim: local_dim must be 2");
      const Matrix zz = spec.coupling("J", 1.0) * kron(pauli(3), pauli(3));
      for (auto [i, j] : lattice.bonds()) terms.push_back(bond_term(i, j, zz));
      const Matrix hx = spec.coupling("h", 1.0) * pauli(1);
      for (int s = 0; s < lattice.site_count; ++s) {
        InteractionTerm t;
        t.support = {s};
        t.matrix = hx;
        terms.push_back(t);
      }
      break;
    }
    case ModelFamily::random_klocal: {
      require(d == 2, "random_klocal: local_dim must be 2");
      require(spec.k == 2, "random_klocal: only k = 2 is implemented");
      const auto bonds = lattice.bonds();
      require(!bonds.empty(), "random_klocal: lattice has no bonds");
      for (std::size_t b = 0; b < bonds.size(); ++b) {
        const auto [i, j] = bonds[b];
        terms.push_back(bond_term(i, j, random_bond(split_seed(spec.seed, b))));
      }
      break;
    }
    case ModelFamily::lmg_longrange: {
      require(d == 2, "lmg_longrange: local_dim must be 2");
      const int n = lattice.site_count;
      require(n >= 2, "lmg_longrange: need at least 2 sites");
      const Matrix m = xy_bond(d, spec.coupling("Jx", 1.0),
                               spec.coupling("Jy", 1.0)) /
                       static_cast<double>(n - 1);
      for (auto [i, j] : all_pairs(n)) terms.push_back(bond_term(i, j, m));
      break;
    }
  }

  for (const auto& t : terms) {
    if (static_cast<int>(t.support.size()) > spec.k)
      throw ConfigError("generated term exceeds the k-body limit");
  }
  return terms;
}

}  // namespace spinbound
