#pragma once

namespace njc {

/// Physical constants of the Kerr / intensity-dependent-coupling JC model
///
///   H = ω[a†a + (r/2)σz] + χ a†²a² + gω(√(1+k a†a) a σ+ + h.c.)
///
/// with χ = kω. Energies are in units of the field quantum when ω = 1.
class ModelParams {
 public:
  /// Throws ValidationError unless ω > 0, g ≥ 0, 0 ≤ k ≤ 1 and every value is finite.
  ModelParams(double omega, double r, double g, double k);

  /// Builds parameters from the detuning Δ = (r − 1)ω instead of r.
  static ModelParams from_detuning(double delta, double g, double k, double omega = 1.0);

  double omega() const noexcept { return omega_; }
  double r() const noexcept { return r_; }
  double g() const noexcept { return g_; }
  double k() const noexcept { return k_; }

  double nu() const noexcept { return r_ * omega_; }
  double detuning() const noexcept { return (r_ - 1.0) * omega_; }
  double chi() const noexcept { return k_ * omega_; }

  ModelParams with_detuning(double delta) const;

  bool operator==(const ModelParams&) const = default;

 private:
  double omega_;
  double r_;
  double g_;
  double k_;
};

/// Largest retained Fock index of a truncated field ladder.
class FockCutoff {
 public:
  /// Throws ValidationError if n_max < 1.
  explicit FockCutoff(int n_max);

  /// Smallest cutoff ≥ max(64, ceil(n̄ + 8√n̄)) whose Poisson tail beyond
  /// n_max is below the 1e-12 truncation tolerance.
  static FockCutoff for_coherent(double nbar);

  int n_max() const noexcept { return n_max_; }
  int dim() const noexcept { return n_max_ + 1; }

  bool operator==(const FockCutoff&) const = default;

 private:
  int n_max_;
};

/// Probability mass a truncated field state may discard.
inline constexpr double kTailTolerance = 1e-12;

}  // namespace njc
