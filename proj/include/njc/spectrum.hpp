#pragma once

#include <span>
#include <vector>

#include "njc/model.hpp"

namespace njc {

/// Dressed eigendata of the 2×2 block spanned by |e,n⟩ and |g,n+1⟩.
struct DressedMode {
  int n = 0;
  double delta_n = 0.0;   ///< block detuning Δn
  double omega_n = 0.0;   ///< Rabi frequency Ωn = E+ − E−
  double e_plus = 0.0;
  double e_minus = 0.0;
  double cos_theta = 1.0;  ///< weight of |e,n⟩ in |+,n⟩
  double sin_theta = 0.0;  ///< weight of |g,n+1⟩ in |+,n⟩
};

/// Uncoupled energies of |e,n⟩ and |g,n⟩; they differ by ν.
struct BareEnergies {
  double e_excited = 0.0;
  double e_ground = 0.0;
};

/// Δn = Δ − 2knω. `n` may be fractional for continuous analysis.
double block_detuning(const ModelParams& params, double n);

/// Off-diagonal block element gω√((1+n)(1+kn)).
double block_coupling(const ModelParams& params, double n);

/// Ωn = √(Δn² + 4g²ω²(1+n)(1+kn)).
double rabi_frequency(const ModelParams& params, double n);

/// 4g²ω²(1+n)(1+kn)/Ωn², the fraction of block population that oscillates.
/// Zero for an uncoupled block.
double mixing_weight(const ModelParams& params, double n);

/// dΩ/dn and d²Ω/dn² of the continuous extension of Ωn.
double rabi_frequency_slope(const ModelParams& params, double n);
double rabi_frequency_curvature(const ModelParams& params, double n);

/// Detuning that makes n̄ the stationary point of Ωn:
///   Δc = 2kωn̄ + g²ω(1 + k + 2kn̄)/k.
/// Throws KerrTermRequired when k = 0 (Ωn is then monotone in n).
double critical_detuning(const ModelParams& params, double n_bar);

/// Second-order expansion of Ωn about n̄, valid when Δ = Δc(n̄):
///   Ω_n̄ + 2(n − n̄)²(k²ω² + kg²ω²)/Ω_n̄.
double rabi_approx(const ModelParams& params, double n, double n_bar);

BareEnergies bare_energies(const ModelParams& params, int n);

/// E±,n without the mixing angle; defined for every block, including Ωn = 0.
std::pair<double, double> dressed_energies(const ModelParams& params, int n);

/// Full dressed data. The mixing coefficients avoid the Ωn − Δn cancellation
/// by working with whichever of (Ωn ± Δn) is large. Throws DegenerateBlock
/// when Ωn = 0 (g = 0 and Δn = 0), where θn is undefined.
DressedMode dressed_mode(const ModelParams& params, int n);

struct SpectrumRow {
  double delta = 0.0;
  int n = 0;
  double e_plus = 0.0;
  double e_minus = 0.0;
  double bare_e = 0.0;  ///< ℰ_{e,n}
  double bare_g = 0.0;  ///< ℰ_{g,n+1}, the bare partner inside block n
};

/// Dressed and bare energies for every (Δ, n) pair, Δ-major. The detuning of
/// `base` is replaced by each grid value; ω, g and k are kept.
std::vector<SpectrumRow> spectrum_sweep(const ModelParams& base, std::span<const int> n_list,
                                        std::span<const double> delta_grid);

}  // namespace njc
