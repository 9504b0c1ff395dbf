#pragma once

#include <vector>

#include "spinbound/common.hpp"

namespace spinbound {

/// Spin operators in the conventional basis: d=2 gives the spin-1/2
/// operators sigma/2, d=3 the spin-1 matrices.
Matrix spin_x(int local_dim);
Matrix spin_y(int local_dim);
Matrix spin_z(int local_dim);

/// Pauli matrices (d=2 only): 0 -> identity, 1 -> X, 2 -> Y, 3 -> Z.
Matrix pauli(int which);

Matrix kron(const Matrix& a, const Matrix& b);

/// Embeds `op` (dimension d^|support|) into the full d^num_sites space with
/// identity on every other site. Site 0 is the most significant base-d digit
/// of a basis-state index; within the term, support must be sorted ascending
/// and support[0] is the most significant local digit.
Matrix embed_operator(const Matrix& op, const std::vector<int>& support,
                      int local_dim, int num_sites);

/// Applies the embedded operator to the columns of a real matrix without
/// forming the full-space embedding. Returns embed(op) * m.
RealMatrix apply_embedded(const RealMatrix& op, const std::vector<int>& support,
                          int local_dim, int num_sites, const RealMatrix& m);
Matrix apply_embedded(const Matrix& op, const std::vector<int>& support,
                      int local_dim, int num_sites, const Matrix& m);

/// Tensor product of a state on sites_a with a state on sites_b, reordered
/// into the global site indexing. sites_a and sites_b must be sorted,
/// disjoint, and together cover 0..num_sites-1.
Vector product_state(const Vector& state_a, const std::vector<int>& sites_a,
                     const Vector& state_b, const std::vector<int>& sites_b,
                     int local_dim, int num_sites);

}  // namespace spinbound
