#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinbound/workspace.hpp"

namespace spinbound {

enum class BoundId {
  expE_tight,
  expE_loose,
  dist,
  product_upper,
  product_lower,
  product_state_corollary,
  hadamard_lemma,
  normphi_lemma,
  expE2_thm,
  expE2_lemma,
  dist2,
  hb_bound,
  lowspec_pi,
  lowspec_tpi,
  lowspec_spectrum,
  trunc_psd,
  trunc_norm_cap,
  trunc_interlace,
  series_hadamard,
  series_kl,
  series_dyson,
  series_dyson_primed,
  series_scalar,
};

std::string to_string(BoundId id);

/// Parameters entering a bound's right-hand side. The Delta quantities are
/// derived, never stored: delta_tau = tau - eps0_L, delta_eps = eps - eps0,
/// delta_eps_tilde = eps - eps0_tilde.
struct BoundParams {
  double eps = 0.0;
  double eps_prime = 0.0;
  double tau = 0.0;
  double R = 0.0;
  double g = 0.0;
  int k = 0;
  double lambda = 0.0;
  double boundary = 0.0;  // |dL|
  double eps0 = 0.0;
  double eps0_L = 0.0;
  double eps0_Lc = 0.0;
  double eps0_tilde = 0.0;
  double a_norm = 1.0;

  double delta_tau() const { return tau - eps0_L; }
  double delta_eps() const { return eps - eps0; }
  double delta_eps_tilde() const { return eps - eps0_tilde; }
};

/// One measured-vs-bound comparison. satisfied <=> lhs <= rhs + 1e-9.
struct BoundReport {
  BoundId id = BoundId::expE_tight;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool satisfied = true;
  BoundParams params;
  std::uint64_t seed = 0;
};

constexpr double kSatisfiedTol = 1e-9;

BoundReport make_report(BoundId id, double lhs, double rhs,
                        const BoundParams& params, std::uint64_t seed);

// --- right-hand sides -------------------------------------------------
// Every evaluator clamps at the trivial bound of its measured quantity
// (||A|| for operator sandwiches, 1 for pure projector overlaps); the raw
// expressions exceed it in near-degenerate regimes where a larger value
// carries no information.

/// ||A|| exp{-(1/gk) [e'-e - R(1 + ln((e'-e)/R))]}, clamped at ||A||.
/// Requires eps_prime > eps.
double rhs_expE_tight(const BoundParams& p);

/// ||A|| e^{-lambda (e'-e-2R)}, clamped at ||A||. Requires eps_prime > eps.
double rhs_expE_loose(const BoundParams& p);

/// Minimizer s = (1/gk)(1 - R/(e'-e)) of e^{-s(e'-e)} (1-s g k)^{-R/gk},
/// clamped into [0, 1/gk). Requires eps_prime > eps.
double optimal_s(const BoundParams& p);

/// The minimized objective at a given s (used for the minimality check).
double expE_objective(const BoundParams& p, double s);

/// (2/sqrt(lambda)) e^{-lambda (dtau - deps - 3|dL|)}, clamped at 1.
double rhs_dist(const BoundParams& p);

/// (2/sqrt(lambda)) e^{-lambda (tau - eps - 3|dL|)}, clamped at 1.
double rhs_product_upper(const BoundParams& p);
/// (2/sqrt(lambda)) e^{-lambda (eps - tau - 3|dL|)}, clamped at 1.
double rhs_product_lower(const BoundParams& p);

/// (2/sqrt(lambda)) e^{-lambda (|eps_prime - eps| - 3|dL|)}, clamped at 1;
/// eps is the global eigenstate energy, eps_prime the product-state energy.
double rhs_product_state(const BoundParams& p);

/// ||A|| (1 - g k s)^{-R/gk}. Requires 0 <= s < 1/gk. Not clamped: the
/// conjugated norm legitimately exceeds ||A||.
double rhs_hadamard(const BoundParams& p, double s);

/// ||A|| (2/sqrt(lambda)) e^{-lambda (eps_phi - eps - 2R)} with
/// eps_phi carried in eps_prime, clamped at ||A||.
double rhs_normphi(const BoundParams& p);

/// ||A|| e^{-lambda (eps' - eps - 2|dL|)}, clamped at ||A||
/// (the two cuts live in eps / eps_prime).
double rhs_expE2_thm(const BoundParams& p);

/// ||A|| e^{-lambda (eps' - eps - 32|dL|)}, clamped at ||A||.
double rhs_expE2_lemma(const BoundParams& p);

/// (2/sqrt(lambda)) e^{-lambda (dtau - deps~ - 33|dL|)}, clamped at 1.
double rhs_dist2(const BoundParams& p);

/// (6/lambda^{3/2}) e^{-lambda (dtau - deps - 3|dL|)}, clamped at `cap`
/// (the computed ||H - H~||).
double rhs_lowspec_pi(const BoundParams& p, double cap);
/// (6/lambda^{3/2}) e^{-lambda (dtau - deps~ - 33|dL|)}, clamped at `cap`.
double rhs_lowspec_tpi(const BoundParams& p, double cap);

/// 16 |dL|.
double rhs_hb(const BoundParams& p);

// --- sweeps ------------------------------------------------------------

/// Grid geometry for the energy sweeps. `points`/`fraction` cover every
/// axis; low_points/low_fraction, when nonzero, override the low-energy
/// projector axis (the eps of Pi_{[0,eps]} in expE, dist and normphi), and
/// hi_points the eps' axis of expE. This is how the 12-spin preset keeps its
/// decay scan cheap: few low eps cuts, many eps' points.
struct GridSpec {
  int points = 20;
  double fraction = 0.9;
  int low_points = 0;
  double low_fraction = 0.0;
  int hi_points = 0;

  int eff_low_points() const { return low_points > 0 ? low_points : points; }
  double eff_low_fraction() const {
    return low_fraction > 0 ? low_fraction : fraction;
  }
  int eff_hi_points() const { return hi_points > 0 ? hi_points : points; }
};

std::vector<BoundReport> check_expE(InstanceWorkspace& ws, const GridSpec& gs,
                                    int threads, std::uint64_t seed);
std::vector<BoundReport> check_dist(InstanceWorkspace& ws, const GridSpec& gs,
                                    int threads, std::uint64_t seed);
std::vector<BoundReport> check_product(InstanceWorkspace& ws,
                                       const GridSpec& gs, int threads,
                                       std::uint64_t seed);
std::vector<BoundReport> check_product_state_corollary(
    InstanceWorkspace& ws, const std::vector<std::pair<int, int>>& pairs,
    std::uint64_t seed);
std::vector<BoundReport> check_hadamard_lemma(InstanceWorkspace& ws,
                                              int s_points, int threads,
                                              std::uint64_t seed);
/// phi = A Pi_{[0,eps]} psi over an ensemble of `samples` random states;
/// instances with ||phi|| <= 1e-12 are skipped.
std::vector<BoundReport> check_normphi(InstanceWorkspace& ws,
                                       const GridSpec& gs, int samples,
                                       int threads, std::uint64_t seed);
/// Families (a) eq:EnergyDist2, (b) the commuting-operator theorem with
/// A = cos(H), (c) the truncated-projector lemma with A = cos(H_L).
std::vector<BoundReport> check_dist2_and_expE2(InstanceWorkspace& ws,
                                               const GridSpec& gs, int threads,
                                               std::uint64_t seed);
std::vector<BoundReport> check_hb_bound(InstanceWorkspace& ws, int s_points,
                                        int threads, std::uint64_t seed);

/// eq:Pi-bound and eq:tPi-bound over an eps grid.
std::vector<BoundReport> check_lowspec_part_i(InstanceWorkspace& ws,
                                              const GridSpec& gs, int threads,
                                              std::uint64_t seed);

/// Structural truncation rows: H - H~ PSD, ||H~|| cap, eigenvalue
/// interlacing, then the per-index spectrum-gap bound for every j with
/// eps_j <= window_fraction of the spectral span.
std::vector<BoundReport> check_truncation(InstanceWorkspace& ws,
                                          double window_fraction,
                                          std::uint64_t seed);

/// Shared parameter skeleton (g, k, lambda, boundary, ground energies).
BoundParams base_params(InstanceWorkspace& ws, bool with_truncated);

}  // namespace spinbound
