#pragma once

#include <complex>

#include <Eigen/Dense>

#include "njc/dynamics.hpp"
#include "njc/model.hpp"

namespace njc {

/// Brute-force reference evolution. Builds the full truncated Hamiltonian in
/// the product basis {|e,n⟩, |g,n⟩} from the ladder operators, diagonalises it
/// with a generic dense Hermitian eigensolver and applies e^{−iHt}. Uses none
/// of the 2×2 block formulas.
///
/// Everything runs in long double: the absolute eigenvalue error of a dense
/// solver scales with ‖H‖ ≈ k n_max² ω, and over t ~ 1e4 the resulting phase
/// error in double would swamp a 1e-10 comparison.
class DenseOracle {
 public:
  using Real = long double;
  using Scalar = std::complex<Real>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

  DenseOracle(const ModelParams& params, FockCutoff cutoff);

  /// State at time t, returned in the interaction frame so it can be compared
  /// entry by entry with evolve_closed_form.
  AtomFieldState evolve(const InitialCondition& init, double t) const;

  /// State at time t in the laboratory frame.
  AtomFieldState evolve_schrodinger(const InitialCondition& init, double t) const;

  /// ⟨H⟩ at time t, accumulated in long double.
  Real energy(const InitialCondition& init, double t) const;

  const Matrix& hamiltonian() const noexcept { return hamiltonian_; }
  const RealVector& eigenvalues() const noexcept { return eigenvalues_; }
  FockCutoff cutoff() const noexcept { return cutoff_; }

 private:
  Vector propagate(const InitialCondition& init, double t) const;

  FockCutoff cutoff_;
  Matrix hamiltonian_;
  RealVector free_energies_;  // diagonal of H0 = ωK+K− + (ν/2)σz
  RealVector eigenvalues_;
  Matrix eigenvectors_;
};

AtomFieldState oracle_evolve(const ModelParams& params, const InitialCondition& init, double t,
                             FockCutoff cutoff);

/// H in the product basis (double precision copy, for expectation values).
Eigen::MatrixXcd hamiltonian_matrix(const ModelParams& params, FockCutoff cutoff);

/// N = K+K− + 2K0σ+σ−, which commutes with H.
Eigen::MatrixXcd constant_of_motion_matrix(const ModelParams& params, FockCutoff cutoff);

/// ⟨state|op|state⟩ for a product-basis operator.
cplx expectation(const Eigen::MatrixXcd& op, const AtomFieldState& state);

}  // namespace njc
