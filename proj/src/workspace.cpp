#include "spinbound/workspace.hpp"

#include <cmath>

#include "spinbound/linalg.hpp"
#include "spinbound/spin_ops.hpp"
#include "spinbound/truncation.hpp"

namespace spinbound {

namespace {

/// cos of a diagonalized Hermitian operator, expressed as a transition
/// matrix in another operator's eigenbasis: V^dag diag(cos e) V where
/// V = U_fn^dag U_basis.
TransitionMatrix function_transition(const SpectralData& fn_sd,
                                     const SpectralData& basis_sd) {
  const RealVector weights = fn_sd.eigenvalues.array().cos();
  if (fn_sd.is_real() && basis_sd.is_real()) {
    RealMatrix v = gemm(fn_sd.real_vecs, basis_sd.real_vecs, true);
    RealMatrix scaled = v;
    for (Eigen::Index i = 0; i < scaled.rows(); ++i)
      scaled.row(i) *= weights(i);
    return TransitionMatrix(basis_sd.eigenvalues, basis_sd.eigenvalues,
                            gemm(v, scaled, true));
  }
  Matrix v = gemm(fn_sd.vectors(), basis_sd.vectors(), true);
  Matrix scaled = v;
  for (Eigen::Index i = 0; i < scaled.rows(); ++i) scaled.row(i) *= weights(i);
  return TransitionMatrix(basis_sd.eigenvalues, basis_sd.eigenvalues,
                          gemm(v, scaled, true));
}

/// Columns of D * U where D = H - H~ is diagonal in the interior eigenbasis:
/// D = U_L (e - clip(e)) U_L^dag. Represented as a transition matrix whose
/// rows carry dummy eigenvalues (always select all rows).
TransitionMatrix one_sided_diff(const SpectralData& interior_sd, double tau,
                                const SpectralData& basis_sd) {
  const Eigen::Index n = interior_sd.dim();
  RealVector gap(n);
  for (Eigen::Index i = 0; i < n; ++i)
    gap(i) =
        interior_sd.eigenvalues(i) - clip_energy(interior_sd.eigenvalues(i), tau);
  if (interior_sd.is_real() && basis_sd.is_real()) {
    RealMatrix overlap = gemm(interior_sd.real_vecs, basis_sd.real_vecs, true);
    for (Eigen::Index i = 0; i < n; ++i) overlap.row(i) *= gap(i);
    // ||D U_sel|| = ||U_L diag(gap) overlap_sel||, and U_L is unitary
    return TransitionMatrix(RealVector::Zero(n), basis_sd.eigenvalues,
                            std::move(overlap));
  }
  Matrix overlap = gemm(interior_sd.vectors(), basis_sd.vectors(), true);
  for (Eigen::Index i = 0; i < n; ++i) overlap.row(i) *= gap(i);
  return TransitionMatrix(RealVector::Zero(n), basis_sd.eigenvalues,
                          std::move(overlap));
}

}  // namespace

InstanceWorkspace::InstanceWorkspace(SpinModel model,
                                     RegionDecomposition decomp,
                                     double tau_trunc, OperatorSpec op_spec)
    : model_(std::move(model)),
      decomp_(std::move(decomp)),
      tau_request_(tau_trunc),
      op_spec_(std::move(op_spec)) {}

const Matrix& InstanceWorkspace::assemble_cached(std::optional<Matrix>& slot,
                                                 const std::vector<int>& terms,
                                                 const char*) {
  if (!slot) slot = assemble_terms(model_, terms);
  return *slot;
}

const SpectralData& InstanceWorkspace::sd_cached(
    std::optional<SpectralData>& slot, const Matrix& source,
    const char* label) {
  if (!slot) slot = diagonalize(source, label);
  return *slot;
}

const Matrix& InstanceWorkspace::h_full() {
  if (!h_full_) {
    std::vector<int> all(model_.terms.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    h_full_ = assemble_terms(model_, all);
  }
  return *h_full_;
}

const Matrix& InstanceWorkspace::h_interior() {
  return assemble_cached(h_interior_, decomp_.interior_terms, "H_L");
}
const Matrix& InstanceWorkspace::h_boundary() {
  return assemble_cached(h_boundary_, decomp_.boundary_terms, "H_d");
}
const Matrix& InstanceWorkspace::h_exterior() {
  return assemble_cached(h_exterior_, decomp_.exterior_terms, "H_Lc");
}

const SpectralData& InstanceWorkspace::sd_full() {
  return sd_cached(sd_full_, h_full(), "H");
}
const SpectralData& InstanceWorkspace::sd_interior() {
  return sd_cached(sd_interior_, h_interior(), "H_L");
}

const SpectralData& InstanceWorkspace::sd_pair() {
  if (!sd_pair_) {
    const Matrix sum = h_interior() + h_exterior();
    sd_pair_ = diagonalize(sum, "H_L + H_Lc");
  }
  return *sd_pair_;
}

double InstanceWorkspace::tau_trunc() {
  if (!tau_resolved_) {
    if (std::isnan(tau_request_)) {
      const auto& ev = sd_interior().eigenvalues;
      tau_resolved_ = ev(ev.size() / 2);
    } else {
      tau_resolved_ = tau_request_;
    }
    if (*tau_resolved_ <= 0.0)
      throw ValidationError("truncation scale tau must be > 0");
  }
  return *tau_resolved_;
}

const Matrix& InstanceWorkspace::h_truncated() {
  if (!h_truncated_) {
    h_truncated_ =
        truncate_interior(sd_interior(), tau_trunc()) + h_boundary() + h_exterior();
  }
  return *h_truncated_;
}

const SpectralData& InstanceWorkspace::sd_truncated() {
  return sd_cached(sd_truncated_, h_truncated(), "H~");
}

const SpectralData& InstanceWorkspace::sd_trunc_pair() {
  if (!sd_trunc_pair_) {
    const Matrix sum = truncate_interior(sd_interior(), tau_trunc()) + h_exterior();
    sd_trunc_pair_ = diagonalize(sum, "H~_L + H_Lc");
  }
  return *sd_trunc_pair_;
}

const SpectralData& InstanceWorkspace::sd_region_sub() {
  if (!sd_region_sub_) {
    sd_region_sub_ = diagonalize(
        assemble_on_sites(model_, decomp_.interior_terms, decomp_.region),
        "H_L | region");
  }
  return *sd_region_sub_;
}

const SpectralData& InstanceWorkspace::sd_complement_sub() {
  if (!sd_complement_sub_) {
    sd_complement_sub_ = diagonalize(
        assemble_on_sites(model_, decomp_.exterior_terms, decomp_.complement),
        "H_Lc | complement");
  }
  return *sd_complement_sub_;
}

double InstanceWorkspace::norm_h_minus_trunc() {
  const auto& ev = sd_interior().eigenvalues;
  const double tau = tau_trunc();
  double best = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    best = std::max(best, ev(i) - clip_energy(ev(i), tau));
  return best;
}

const OperatorMeta& InstanceWorkspace::op_meta() {
  if (!op_meta_) {
    int site = op_spec_.site;
    if (site < 0) {
      if (decomp_.region.empty())
        throw ValidationError("operator site: region is empty");
      site = decomp_.region[decomp_.region.size() / 2];
    }
    Matrix local;
    if (op_spec_.kind == "sx") local = spin_x(model_.local_dim);
    else if (op_spec_.kind == "sy") local = spin_y(model_.local_dim);
    else if (op_spec_.kind == "sz") local = spin_z(model_.local_dim);
    else throw ConfigError("unknown operator kind: " + op_spec_.kind);
    op_local_ = local / operator_norm_hermitian(local);
    op_meta_ = OperatorMeta{{site}, false};
  }
  return *op_meta_;
}

double InstanceWorkspace::op_weight() {
  return operator_region_weight(op_meta(), decomp_);
}

const TransitionMatrix& InstanceWorkspace::t_op_full() {
  if (!t_op_full_) {
    const auto& meta = op_meta();
    const auto& sd = sd_full();
    const int n_sites = model_.lattice.site_count;
    if (sd.is_real() && is_numerically_real(op_local_)) {
      const RealMatrix au = apply_embedded(RealMatrix(op_local_.real()),
                                           meta.support, model_.local_dim,
                                           n_sites, sd.real_vecs);
      t_op_full_ = TransitionMatrix(sd.eigenvalues, sd.eigenvalues,
                                    gemm(sd.real_vecs, au, true));
    } else {
      const Matrix au = apply_embedded(op_local_, meta.support,
                                       model_.local_dim, n_sites, sd.vectors());
      t_op_full_ = TransitionMatrix(sd.eigenvalues, sd.eigenvalues,
                                    gemm(sd.vectors(), au, true));
    }
  }
  return *t_op_full_;
}

const TransitionMatrix& InstanceWorkspace::t_interior_full() {
  if (!t_interior_full_)
    t_interior_full_ = make_transition(sd_interior(), nullptr, sd_full());
  return *t_interior_full_;
}

const TransitionMatrix& InstanceWorkspace::t_full_pair() {
  if (!t_full_pair_)
    t_full_pair_ = make_transition(sd_full(), nullptr, sd_pair());
  return *t_full_pair_;
}

const TransitionMatrix& InstanceWorkspace::t_interior_trunc() {
  if (!t_interior_trunc_)
    t_interior_trunc_ = make_transition(sd_interior(), nullptr, sd_truncated());
  return *t_interior_trunc_;
}

const TransitionMatrix& InstanceWorkspace::t_pair_commuting() {
  if (!t_pair_commuting_)
    t_pair_commuting_ = function_transition(sd_full(), sd_pair());
  return *t_pair_commuting_;
}

const TransitionMatrix& InstanceWorkspace::t_trunc_interior_fn() {
  if (!t_trunc_interior_fn_)
    t_trunc_interior_fn_ = function_transition(sd_interior(), sd_truncated());
  return *t_trunc_interior_fn_;
}

const TransitionMatrix& InstanceWorkspace::t_boundary_trunc_pair() {
  if (!t_boundary_trunc_pair_) {
    const Matrix& hb = h_boundary();
    t_boundary_trunc_pair_ = make_transition(sd_trunc_pair(), &hb, sd_trunc_pair());
  }
  return *t_boundary_trunc_pair_;
}

const TransitionMatrix& InstanceWorkspace::w_diff_full() {
  if (!w_diff_full_)
    w_diff_full_ = one_sided_diff(sd_interior(), tau_trunc(), sd_full());
  return *w_diff_full_;
}

const TransitionMatrix& InstanceWorkspace::w_diff_trunc() {
  if (!w_diff_trunc_)
    w_diff_trunc_ = one_sided_diff(sd_interior(), tau_trunc(), sd_truncated());
  return *w_diff_trunc_;
}

double InstanceWorkspace::norm_cos_full() {
  if (!norm_cos_full_)
    norm_cos_full_ = sd_full().eigenvalues.array().cos().abs().maxCoeff();
  return *norm_cos_full_;
}

double InstanceWorkspace::norm_cos_interior() {
  if (!norm_cos_interior_)
    norm_cos_interior_ =
        sd_interior().eigenvalues.array().cos().abs().maxCoeff();
  return *norm_cos_interior_;
}

void InstanceWorkspace::clear() {
  h_full_.reset();
  h_interior_.reset();
  h_boundary_.reset();
  h_exterior_.reset();
  h_truncated_.reset();
  sd_full_.reset();
  sd_interior_.reset();
  sd_pair_.reset();
  sd_truncated_.reset();
  sd_trunc_pair_.reset();
  sd_region_sub_.reset();
  sd_complement_sub_.reset();
  t_op_full_.reset();
  t_interior_full_.reset();
  t_full_pair_.reset();
  t_interior_trunc_.reset();
  t_pair_commuting_.reset();
  t_trunc_interior_fn_.reset();
  t_boundary_trunc_pair_.reset();
  w_diff_full_.reset();
  w_diff_trunc_.reset();
  norm_cos_full_.reset();
  norm_cos_interior_.reset();
}

std::vector<double> energy_grid(const SpectralData& sd, int points,
                                double fraction) {
  if (points < 1) throw ConfigError("energy_grid: points must be >= 1");
  const double lo = sd.ground_energy();
  const double span = fraction * (sd.max_energy() - lo);
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = lo + 0.5 * span;
    return out;
  }
  for (int i = 0; i < points; ++i)
    out[i] = lo + span * static_cast<double>(i) / (points - 1);
  return out;
}

}  // namespace spinbound
