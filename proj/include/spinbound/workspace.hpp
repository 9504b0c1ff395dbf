#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spinbound/decomposition.hpp"
#include "spinbound/spectral.hpp"
#include "spinbound/spin_model.hpp"

namespace spinbound {

/// Which single-site operator plays the role of A in the operator-dependent
/// sweeps. site < 0 picks the middle site of the region.
struct OperatorSpec {
  std::string kind = "sx";  // sx | sy | sz
  int site = -1;
};

/// Per-instance cache of assembled operators, eigendecompositions and
/// transition matrices. Everything is built lazily on first use and kept for
/// the lifetime of the workspace, so suites share the expensive pieces.
/// Build methods run serially (they use BLAS); the returned references are
/// immutable and safe to read from sweep threads.
class InstanceWorkspace {
 public:
  InstanceWorkspace(SpinModel model, RegionDecomposition decomp,
                    double tau_trunc,  // NaN = auto (median of H_L spectrum)
                    OperatorSpec op_spec = {});

  const SpinModel& model() const { return model_; }
  const RegionDecomposition& decomp() const { return decomp_; }

  // assembled operators on the full space
  const Matrix& h_full();
  const Matrix& h_interior();   // H_L
  const Matrix& h_boundary();   // H_d
  const Matrix& h_exterior();   // H_Lc
  const Matrix& h_truncated();  // H~ = H~_L + H_d + H_Lc

  // eigendecompositions
  const SpectralData& sd_full();        // H
  const SpectralData& sd_interior();    // H_L (embedded)
  const SpectralData& sd_pair();        // H_L + H_Lc
  const SpectralData& sd_truncated();   // H~
  const SpectralData& sd_trunc_pair();  // H~_L + H_Lc
  const SpectralData& sd_region_sub();      // H_L on the region subsystem
  const SpectralData& sd_complement_sub();  // H_Lc on the complement

  /// Truncation scale; resolves "auto" to the median eigenvalue of H_L on
  /// first use.
  double tau_trunc();
  /// ||H - H~|| = max_j (eps_j(L) - min(eps_j(L), tau)).
  double norm_h_minus_trunc();

  // the test operator A: unit-norm single-site spin operator inside L
  const OperatorMeta& op_meta();
  double op_norm() const { return 1.0; }
  double op_weight();  // R = |Lbar| for the default (non-commuting) A

  // transition matrices for the sweeps
  const TransitionMatrix& t_op_full();          // U_H^dag A U_H
  const TransitionMatrix& t_interior_full();    // U_{H_L}^dag U_H
  const TransitionMatrix& t_full_pair();        // U_H^dag U_Q
  const TransitionMatrix& t_interior_trunc();   // U_{H_L}^dag U_{H~}
  const TransitionMatrix& t_pair_commuting();   // U_Q^dag cos(H) U_Q
  const TransitionMatrix& t_trunc_interior_fn();// U_{H~}^dag cos(H_L) U_{H~}
  const TransitionMatrix& t_boundary_trunc_pair();  // U_M^dag H_d U_M, M = H~_L + H_Lc
  /// Columns of (H - H~) U_{H} resp. U_{H~}, for one-sided projections;
  /// row eigenvalues are dummies, select rows with EnergyInterval::all().
  const TransitionMatrix& w_diff_full();
  const TransitionMatrix& w_diff_trunc();

  /// ||cos(H)|| and ||cos(H_L)|| for the commuting-operator families.
  double norm_cos_full();
  double norm_cos_interior();

  /// Releases every cached matrix (the SpinModel stays).
  void clear();

 private:
  const Matrix& assemble_cached(std::optional<Matrix>& slot,
                                const std::vector<int>& terms,
                                const char* label);
  const SpectralData& sd_cached(std::optional<SpectralData>& slot,
                                const Matrix& source, const char* label);

  SpinModel model_;
  RegionDecomposition decomp_;
  double tau_request_;
  OperatorSpec op_spec_;

  std::optional<Matrix> h_full_, h_interior_, h_boundary_, h_exterior_,
      h_truncated_;
  std::optional<SpectralData> sd_full_, sd_interior_, sd_pair_, sd_truncated_,
      sd_trunc_pair_, sd_region_sub_, sd_complement_sub_;
  std::optional<double> tau_resolved_;
  std::optional<OperatorMeta> op_meta_;
  Matrix op_local_;
  std::optional<TransitionMatrix> t_op_full_, t_interior_full_, t_full_pair_,
      t_interior_trunc_, t_pair_commuting_, t_trunc_interior_fn_,
      t_boundary_trunc_pair_, w_diff_full_, w_diff_trunc_;
  std::optional<double> norm_cos_full_, norm_cos_interior_;
};

/// Uniform grid of `points` energies spanning
/// [e0, e0 + fraction * (e_max - e0)] of the given spectrum.
std::vector<double> energy_grid(const SpectralData& sd, int points,
                                double fraction);

}  // namespace spinbound
