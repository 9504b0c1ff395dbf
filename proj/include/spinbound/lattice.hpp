#pragma once

#include <utility>
#include <vector>

namespace spinbound {

enum class Boundary { open, periodic };

/// A D-dimensional rectangular lattice. Sites are indexed row-major:
/// index = c_0 * (e_1 * ... * e_{D-1}) + c_1 * (e_2 * ... ) + ... + c_{D-1},
/// where c_a is the coordinate along axis a and e_a the extent of that axis.
struct Lattice {
  int dimension = 1;
  std::vector<int> extents;
  Boundary boundary = Boundary::open;
  int site_count = 0;

  int index_of(const std::vector<int>& coords) const;
  std::vector<int> coords_of(int site) const;

  /// Nearest-neighbor edges (i < j as site indices except for periodic wrap
  /// bonds, where the wrap partner may be smaller). Order: sites row-major,
  /// then axis; deterministic.
  std::vector<std::pair<int, int>> bonds() const;
};

Lattice build_lattice(int dimension, const std::vector<int>& extents,
                      Boundary boundary);

}  // namespace spinbound
