#pragma once

#include <vector>

#include "spinbound/spin_model.hpp"

namespace spinbound {

/// Partition of the term list induced by a region L: a term lives in the
/// interior if its support is inside L, in the exterior if inside the
/// complement, on the boundary otherwise. The "sizes" are summed term norms
/// (the paper-style |L|, |dL|, |L^c|, |Lbar| weights), not site counts.
struct RegionDecomposition {
  std::vector<int> region;      // sorted sites of L
  std::vector<int> complement;  // sorted sites of L^c
  std::vector<int> interior_terms;
  std::vector<int> boundary_terms;
  std::vector<int> exterior_terms;
  double size_interior = 0.0;  // |L|
  double size_boundary = 0.0;  // |dL|
  double size_exterior = 0.0;  // |L^c|
  double size_closure = 0.0;   // |Lbar| = |L| + |dL|
};

RegionDecomposition decompose(const SpinModel& model, std::vector<int> region);

/// Metadata for the operator a bound is applied to.
struct OperatorMeta {
  std::vector<int> support;          // sorted sites, must lie inside L
  bool commutes_with_interior = false;  // known [A, H_L] = 0
};

/// Interaction weight R for an operator supported inside L: |Lbar| in
/// general, |dL| when the operator commutes with H_L. Throws when the
/// support leaves the region.
double operator_region_weight(const OperatorMeta& meta,
                              const RegionDecomposition& decomp);

}  // namespace spinbound
