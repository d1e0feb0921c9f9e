#pragma once

#include <span>
#include <vector>

#include "njc/algebra.hpp"
#include "njc/dynamics.hpp"
#include "njc/model.hpp"

namespace njc {

/// Atomic inversion W(t) and its time-dependent part W_T(t).
struct InversionRecord {
  double t = 0.0;
  double w = 0.0;
  double w_t = 0.0;
};

struct FieldMoments {
  cplx mean_a;
  cplx mean_a2;
  double mean_n = 0.0;
  double mean_n2 = 0.0;
};

struct QuadratureVariances {
  double dx2 = 0.0;
  double dy2 = 0.0;
};

/// Revival / collapse time scales of W_T for a coherent field.
struct RevivalEstimate {
  double t_revival = 0.0;
  double t_collapse = 0.0;
  double const_a = 0.0;  ///< 4(k²ω² + kg²ω²)
  double const_b = 0.0;  ///< 4(g²ω² + kg²ω² − Δkω)
};

// ---------------------------------------------------------------------------
// Atomic inversion

/// Σ_n (|C_{e,n}|² − |C_{g,n}|²).
double inversion_from_state(const AtomFieldState& state);

/// Closed series for an initially excited atom with photon distribution P_n:
///   W   = 1 + Σ P_n s_n (cos Ω_n t − 1)
///   W_T = Σ P_n s_n cos Ω_n t,      s_n = 4g²ω²(1+n)(1+kn)/Ω_n²
/// summed over the coupled blocks n < n_max.
InversionRecord inversion_series(const ModelParams& params, const FieldState& initial_field,
                                 double t);

/// One record per state. `w` is always taken from the amplitudes (valid for
/// any initial atom); `w_t` is the series value for the initial field, which
/// assumes an initially excited atom.
std::vector<InversionRecord> inversion(const ModelParams& params,
                                       std::span<const AtomFieldState> states,
                                       const FieldState& initial_field);

/// Revival time T_R = 4πΩ_n̄ / |2An̄ + A + B| and collapse time T_C = T_R/(4π√n̄).
/// Throws NoRevivalScale if |2An̄ + A + B| < 1e-30 and InvalidArgument if n̄ ≤ 0.
RevivalEstimate revival_estimate(const ModelParams& params, double n_bar);

/// Resonant SU(1,1) (k = 1, r = 1) approximation
///   W_T ≈ g² exp(n̄(cos ωt − 1)) cos(n̄ sin ωt).
double su11_resonant_wt(const ModelParams& params, double n_bar, double t);

// ---------------------------------------------------------------------------
// Photon statistics

/// Exact photon distribution P(n,t) = |C_{e,n}|² + |C_{g,n}|² for an initially
/// excited atom, written in closed form. |g,n⟩ is fed from block n − 1:
///   P(n,t) = P_n(1 − s_n sin²(Ω_n t/2)) + P_{n−1} s_{n−1} sin²(Ω_{n−1} t/2).
std::vector<double> photon_distribution(const ModelParams& params,
                                        const FieldState& initial_field, double t);

/// The single-index form (P_n/2)[1 + Δn²/Ωn² + s_n cos Ωn t]. It equals
/// |C_{e,n}(t)|² only; the ground-state share (1 − W)/2 is missing.
std::vector<double> photon_distribution_single_index(const ModelParams& params,
                                                     const FieldState& initial_field, double t);

/// |C_{e,n}|² + |C_{g,n}|² from amplitudes.
std::vector<double> photon_distribution(const AtomFieldState& state);

/// Mandel Q in the variance-over-mean convention: 1 for Poissonian light,
/// < 1 sub-Poissonian. Throws VacuumOnly if ⟨n⟩ = 0 and InvalidArgument if
/// the distribution is not normalised within 1e-8.
double mandel_q(std::span<const double> distribution);

// ---------------------------------------------------------------------------
// Field amplitudes

/// Field moments with the atom traced out.
FieldMoments field_moments(const AtomFieldState& state);

/// (δX)², (δY)² with X = (a + a†)/√2, Y = i(a† − a)/√2. Coherent states give 1/2.
QuadratureVariances quadrature_variances(const AtomFieldState& state);

// ---------------------------------------------------------------------------
// Overlap with the initial state

/// e^{−|α|²} |Σ (|α|^{2n}/n!) [cos(Ω_n t/2) + i(Δn/Ωn) sin(Ω_n t/2)]|²,
/// excited atom and coherent field, truncated at `cutoff`.
double overlap(const ModelParams& params, cplx alpha, double t, FockCutoff cutoff);

/// Same with FockCutoff::for_coherent(|α|²).
double overlap(const ModelParams& params, cplx alpha, double t);

/// |⟨a|b⟩|². The series above equals this for block-frame states.
double overlap_from_states(const AtomFieldState& a, const AtomFieldState& b);

/// Stationary-phase decay envelope of the overlap, expanded about N ≥ n̄:
///   [1 + N²Ω″_N t²/4]^{−1/4} · exp[−N²Ω′_N t²/4]
/// Throws InvalidArgument when the bracket is not positive (the expansion is
/// outside its range there).
double overlap_envelope(const ModelParams& params, double n_bar, double big_n, double t);

}  // namespace njc
