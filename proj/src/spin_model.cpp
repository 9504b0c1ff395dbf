#include "spinbound/spin_model.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "spinbound/spin_ops.hpp"

namespace spinbound {

std::int64_t default_dim_cap() {
  if (const char* env = std::getenv("SPINBOUND_DIM_CAP")) {
    const long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 16384;
}

double compute_g(const std::vector<InteractionTerm>& terms, int num_sites) {
  std::vector<double> per_site(num_sites, 0.0);
  for (const auto& t : terms)
    for (int s : t.support) per_site.at(s) += t.norm;
  double g = 0.0;
  for (double v : per_site) g = std::max(g, v);
  return g;
}

double compute_lambda(double g, int k) {
  if (g <= 0.0) throw ValidationError("compute_lambda: g must be positive");
  if (k < 1) throw ValidationError("compute_lambda: k must be >= 1");
  return 1.0 / (2.0 * g * k);
}

SpinModel SpinModel::build(Lattice lattice, std::vector<InteractionTerm> raw,
                           int local_dim, int k, std::int64_t dim_cap) {
  std::int64_t dim = 1;
  for (int s = 0; s < lattice.site_count; ++s) {
    dim *= local_dim;
    if (dim > dim_cap)
      throw ResourceError("Hilbert dimension d^N exceeds the cap of " +
                          std::to_string(dim_cap) +
                          " (override with SPINBOUND_DIM_CAP)");
  }

  SpinModel model;
  model.lattice = std::move(lattice);
  model.local_dim = local_dim;
  model.k = k;
  model.hilbert_dim = dim;
  model.terms.reserve(raw.size());
  for (const auto& t : raw) {
    if (static_cast<int>(t.support.size()) > k)
      throw ValidationError("term support exceeds k");
    model.terms.push_back(shift_to_psd(t));
  }
  model.g = compute_g(model.terms, model.lattice.site_count);
  model.lambda = compute_lambda(model.g, k);
  return model;
}

Matrix assemble_terms(const SpinModel& model,
                      const std::vector<int>& term_indices) {
  Matrix h = Matrix::Zero(model.hilbert_dim, model.hilbert_dim);
  for (int idx : term_indices) {
    const auto& t = model.terms.at(idx);
    h += embed_operator(t.matrix, t.support, model.local_dim,
                        model.lattice.site_count);
  }
  return h;
}

Matrix assemble(const SpinModel& model) {
  std::vector<int> all(model.terms.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return assemble_terms(model, all);
}

Matrix assemble_on_sites(const SpinModel& model,
                         const std::vector<int>& term_indices,
                         const std::vector<int>& sites) {
  if (!std::is_sorted(sites.begin(), sites.end()))
    throw ValidationError("assemble_on_sites: sites must be sorted ascending");

  // local index of each lattice site inside `sites`; the map is monotone, so
  // sorted global supports stay sorted locally and term matrices carry over
  // digit-for-digit
  std::vector<int> local_of(model.lattice.site_count, -1);
  for (std::size_t i = 0; i < sites.size(); ++i) local_of[sites[i]] = static_cast<int>(i);

  std::int64_t dim = 1;
  for (std::size_t i = 0; i < sites.size(); ++i) dim *= model.local_dim;

  Matrix h = Matrix::Zero(dim, dim);
  for (int idx : term_indices) {
    const auto& t = model.terms.at(idx);
    std::vector<int> local_support;
    local_support.reserve(t.support.size());
    for (int s : t.support) {
      if (local_of[s] < 0)
        throw ValidationError("assemble_on_sites: term support leaves the site set");
      local_support.push_back(local_of[s]);
    }
    h += embed_operator(t.matrix, local_support, model.local_dim,
                        static_cast<int>(sites.size()));
  }
  return h;
}

}  // namespace spinbound
