#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "njc/error.hpp"
#include "njc/model.hpp"

namespace njc {

using cplx = std::complex<double>;

/// Single-mode field state on a truncated Fock ladder, c_0 .. c_{n_max}.
class FieldState {
 public:
  /// Throws ValidationError unless Σ|c_n|² = 1 within 1e-12. `tail_mass` records
  /// probability that was discarded (and renormalised away) when truncating.
  explicit FieldState(Eigen::VectorXcd amplitudes, double tail_mass = 0.0);

  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  int n_max() const noexcept { return static_cast<int>(amplitudes_.size()) - 1; }
  FockCutoff cutoff() const { return FockCutoff(n_max()); }
  double tail_mass() const noexcept { return tail_mass_; }

  /// P_n = |c_n|².
  std::vector<double> probabilities() const;
  double mean_photon_number() const;

 private:
  Eigen::VectorXcd amplitudes_;
  double tail_mass_;
};

/// Matrices of the interpolating algebra {K−, K+, K0} and of the bosonic
/// ladder {a, a†} on a truncated Fock space. K− = √(1 + k a†a) a.
template <typename Real>
struct BasicLadderMatrices {
  using Matrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix k_minus;
  Matrix k_plus;
  Matrix k_zero;
  Matrix a;
  Matrix a_dagger;
};

using LadderMatrices = BasicLadderMatrices<double>;

/// ⟨n−1|K−|n⟩ = √(n(1 + k(n−1))), ⟨n|K0|n⟩ = kn + 1/2, ⟨n−1|a|n⟩ = √n.
/// `Real` selects the working precision (the dense oracle uses long double).
template <typename Real = double>
BasicLadderMatrices<Real> build_ladder(const ModelParams& params, FockCutoff cutoff) {
  using Scalar = std::complex<Real>;
  using Matrix = typename BasicLadderMatrices<Real>::Matrix;
  const int dim = cutoff.dim();
  const Real k = static_cast<Real>(params.k());

  BasicLadderMatrices<Real> out{Matrix::Zero(dim, dim), Matrix::Zero(dim, dim),
                                Matrix::Zero(dim, dim), Matrix::Zero(dim, dim),
                                Matrix::Zero(dim, dim)};
  for (int n = 0; n < dim; ++n) {
    const Real rn = static_cast<Real>(n);
    out.k_zero(n, n) = Scalar(k * rn + Real(0.5));
    if (n == 0) continue;
    using std::sqrt;
    out.a(n - 1, n) = Scalar(sqrt(rn));
    out.k_minus(n - 1, n) = Scalar(sqrt(rn * (Real(1) + k * (rn - Real(1)))));
  }
  out.a_dagger = out.a.adjoint();
  out.k_plus = out.k_minus.adjoint();
  return out;
}

/// Glauber coherent state |α⟩ truncated at `cutoff` and renormalised.
/// Amplitudes are formed in log space, so large n does not overflow n!.
/// Throws TailTooHeavy if the discarded mass is ≥ 1e-12.
FieldState coherent_state(cplx alpha, FockCutoff cutoff);

/// Number state |n⟩. Throws IndexBeyondCutoff if n > n_max.
FieldState fock_state(int n, FockCutoff cutoff);

/// ⟨state|op|state⟩. Throws DimensionMismatch unless op is (n_max+1)².
cplx expectation(const Eigen::MatrixXcd& op, const FieldState& state);

/// log of the Poisson weight e^{−n̄} n̄ⁿ / n!.
double poisson_log_pmf(double nbar, int n);

/// Σ_{m > n_max} of the Poisson weights with mean n̄.
double poisson_tail(double nbar, int n_max);

}  // namespace njc
