#include "njc/model.hpp"

#include <cmath>
#include <string>

#include "njc/algebra.hpp"
#include "njc/error.hpp"

namespace njc {

ModelParams::ModelParams(double omega, double r, double g, double k)
    : omega_(omega), r_(r), g_(g), k_(k) {
  if (!std::isfinite(omega) || !std::isfinite(r) || !std::isfinite(g) || !std::isfinite(k)) {
    throw ValidationError("model parameters must be finite");
  }
  if (omega <= 0.0) throw ValidationError("omega must be > 0, got " + std::to_string(omega));
  if (g < 0.0) throw ValidationError("g must be >= 0, got " + std::to_string(g));
  if (k < 0.0 || k > 1.0) {
    throw ValidationError("k must satisfy 0 <= k <= 1, got " + std::to_string(k));
  }
}

ModelParams ModelParams::from_detuning(double delta, double g, double k, double omega) {
  if (!(omega > 0.0)) throw ValidationError("omega must be > 0");
  return ModelParams(omega, 1.0 + delta / omega, g, k);
}

ModelParams ModelParams::with_detuning(double delta) const {
  return from_detuning(delta, g_, k_, omega_);
}

FockCutoff::FockCutoff(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw ValidationError("n_max must be >= 1, got " + std::to_string(n_max));
}

FockCutoff FockCutoff::for_coherent(double nbar) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
    throw ValidationError("mean photon number must be finite and >= 0");
  }
  int n_max = std::max(64, static_cast<int>(std::ceil(nbar + 8.0 * std::sqrt(nbar))));
  while (poisson_tail(nbar, n_max) >= kTailTolerance) ++n_max;
  return FockCutoff(n_max);
}

}  // namespace njc
