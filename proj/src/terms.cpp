#include "spinbound/terms.hpp"

namespace spinbound {

double operator_norm_hermitian(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

InteractionTerm shift_to_psd(const InteractionTerm& term) {
  if (!is_hermitian(term.matrix))
    throw ValidationError("shift_to_psd: term matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(term.matrix,
                                               Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  const double lo = ev(0);
  const double hi = ev(ev.size() - 1);
  InteractionTerm out;
  out.support = term.support;
  out.matrix = term.matrix - lo * Matrix::Identity(term.matrix.rows(),
                                                   term.matrix.cols());
  out.norm = hi - lo;
  return out;
}

}  // namespace spinbound
