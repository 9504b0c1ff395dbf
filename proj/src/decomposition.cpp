#include "spinbound/decomposition.hpp"

#include <algorithm>

namespace spinbound {

RegionDecomposition decompose(const SpinModel& model, std::vector<int> region) {
  std::sort(region.begin(), region.end());
  region.erase(std::unique(region.begin(), region.end()), region.end());

  const int n = model.lattice.site_count;
  std::vector<char> in_region(n, 0);
  for (int s : region) {
    if (s < 0 || s >= n)
      throw ValidationError("decompose: region contains an unknown site");
    in_region[s] = 1;
  }

  RegionDecomposition d;
  d.region = std::move(region);
  for (int s = 0; s < n; ++s)
    if (!in_region[s]) d.complement.push_back(s);

  for (std::size_t i = 0; i < model.terms.size(); ++i) {
    const auto& t = model.terms[i];
    const auto inside =
        std::count_if(t.support.begin(), t.support.end(),
                      [&](int s) { return in_region[s] != 0; });
    const int idx = static_cast<int>(i);
    if (inside == static_cast<long>(t.support.size())) {
      d.interior_terms.push_back(idx);
      d.size_interior += t.norm;
    } else if (inside == 0) {
      d.exterior_terms.push_back(idx);
      d.size_exterior += t.norm;
    } else {
      d.boundary_terms.push_back(idx);
      d.size_boundary += t.norm;
    }
  }
  d.size_closure = d.size_interior + d.size_boundary;
  return d;
}

double operator_region_weight(const OperatorMeta& meta,
                              const RegionDecomposition& decomp) {
  for (int s : meta.support) {
    if (!std::binary_search(decomp.region.begin(), decomp.region.end(), s))
      throw ValidationError(
          "operator_region_weight: operator support leaves the region");
  }
  return meta.commutes_with_interior ? decomp.size_boundary
                                     : decomp.size_closure;
}

}  // namespace spinbound
