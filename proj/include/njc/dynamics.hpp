#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "njc/algebra.hpp"
#include "njc/model.hpp"

namespace njc {

/// Reference frame in which the amplitudes of an AtomFieldState are expressed.
enum class Frame {
  /// Free evolution e^{−iH0 t}, H0 = ωK+K− + (ν/2)σz, factored out.
  interaction,
  /// Laboratory frame.
  schrodinger,
  /// Interaction frame with the extra per-block phases e^{∓iΔn t/2} removed,
  /// i.e. co-rotating with the mean energy of each 2×2 block.
  block,
};

/// Joint amplitudes C_{e,n}, C_{g,n} for n = 0..n_max at time `time`.
struct AtomFieldState {
  Eigen::VectorXcd c_e;
  Eigen::VectorXcd c_g;
  double time = 0.0;
  Frame frame = Frame::interaction;

  int n_max() const noexcept { return static_cast<int>(c_e.size()) - 1; }
  double norm_squared() const { return c_e.squaredNorm() + c_g.squaredNorm(); }
};

/// Atom ⊗ field product state at t = 0.
class InitialCondition {
 public:
  static InitialCondition excited(FieldState field);
  static InitialCondition ground(FieldState field);
  /// Throws ValidationError unless |ce|² + |cg|² = 1 within 1e-12.
  static InitialCondition superposition(cplx ce, cplx cg, FieldState field);

  cplx atom_excited() const noexcept { return atom_e_; }
  cplx atom_ground() const noexcept { return atom_g_; }
  const FieldState& field() const noexcept { return field_; }
  bool is_excited() const noexcept { return atom_g_ == cplx{}; }

 private:
  InitialCondition(cplx ce, cplx cg, FieldState field);

  cplx atom_e_;
  cplx atom_g_;
  FieldState field_;
};

AtomFieldState initial_state(const InitialCondition& init);

/// Exact interaction-picture evolution to time t ≥ 0. Each block
/// {|e,n⟩, |g,n+1⟩} is propagated analytically; |g,0⟩ is uncoupled and the
/// |e,n_max⟩ → |g,n_max+1⟩ coupling lies outside the cutoff and is dropped.
AtomFieldState evolve_closed_form(const ModelParams& params, const InitialCondition& init,
                                  double t);

/// Propagates an interaction-frame state from its own time by `dt` ≥ 0.
AtomFieldState evolve_closed_form(const ModelParams& params, const AtomFieldState& from,
                                  double dt);

/// Closed-form evolution sampled at every grid point, each computed directly
/// from t = 0. Throws EmptyGrid on an empty grid and InvalidArgument unless
/// the grid is strictly increasing and nonnegative.
std::vector<AtomFieldState> evolve_series(const ModelParams& params,
                                          const InitialCondition& init,
                                          std::span<const double> times);

/// Interaction → laboratory frame: C_{e,n} ← e^{−iℰ_{e,n}t}C_{e,n}, likewise for g.
AtomFieldState to_schrodinger(const ModelParams& params, const AtomFieldState& state);

/// Interaction → block frame: C_{e,n} ← e^{−iΔn t/2}C_{e,n}, C_{g,n+1} ← e^{iΔn t/2}C_{g,n+1}.
AtomFieldState to_block_frame(const ModelParams& params, const AtomFieldState& state);

/// ⟨a|b⟩ over both atomic levels. Throws DimensionMismatch on different cutoffs.
cplx inner_product(const AtomFieldState& a, const AtomFieldState& b);

/// Product-basis layout used by the dense matrices: index 2n ↔ |e,n⟩, 2n+1 ↔ |g,n⟩.
Eigen::VectorXcd to_product_vector(const AtomFieldState& state);
AtomFieldState from_product_vector(const Eigen::VectorXcd& v, double time, Frame frame);

}  // namespace njc
