#pragma once

#include <vector>

#include "spinbound/common.hpp"

namespace spinbound {

/// One interaction term h_X: a support set and a Hermitian matrix acting on
/// it. After PSD normalization the smallest eigenvalue is 0 and `norm`
/// caches the operator norm (= largest eigenvalue).
struct InteractionTerm {
  std::vector<int> support;  // sorted site indices, |support| <= k
  Matrix matrix;             // dimension d^|support|
  double norm = 0.0;
};

/// Shifts a Hermitian term by -lambda_min * I so it becomes positive
/// semi-definite, and caches its operator norm. Throws ValidationError on
/// non-Hermitian input.
InteractionTerm shift_to_psd(const InteractionTerm& term);

double operator_norm_hermitian(const Matrix& m);

}  // namespace spinbound
