#include "spinbound/lattice.hpp"

#include <string>

#include "spinbound/common.hpp"

namespace spinbound {

int Lattice::index_of(const std::vector<int>& coords) const {
  int idx = 0;
  for (int a = 0; a < dimension; ++a) idx = idx * extents[a] + coords[a];
  return idx;
}

std::vector<int> Lattice::coords_of(int site) const {
  std::vector<int> coords(dimension);
  for (int a = dimension - 1; a >= 0; --a) {
    coords[a] = site % extents[a];
    site /= extents[a];
  }
  return coords;
}

std::vector<std::pair<int, int>> Lattice::bonds() const {
  std::vector<std::pair<int, int>> out;
  for (int site = 0; site < site_count; ++site) {
    const auto coords = coords_of(site);
    for (int a = 0; a < dimension; ++a) {
      const int extent = extents[a];
      if (coords[a] + 1 < extent) {
        auto next = coords;
        next[a] += 1;
        out.emplace_back(site, index_of(next));
      } else if (boundary == Boundary::periodic && extent > 2) {
        // extent 2 would duplicate the open bond along this axis
        auto next = coords;
        next[a] = 0;
        out.emplace_back(site, index_of(next));
      }
    }
  }
  return out;
}

Lattice build_lattice(int dimension, const std::vector<int>& extents,
                      Boundary boundary) {
  if (dimension < 1)
    throw ValidationError("build_lattice: dimension must be >= 1");
  if (static_cast<int>(extents.size()) != dimension)
    throw ValidationError("build_lattice: expected " +
                          std::to_string(dimension) + " extents, got " +
                          std::to_string(extents.size()));
  int count = 1;
  for (int e : extents) {
    if (e < 2)
      throw ValidationError("build_lattice: every extent must be >= 2");
    count *= e;
  }
  return Lattice{dimension, extents, boundary, count};
}

}  // namespace spinbound
