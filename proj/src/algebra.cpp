#include "njc/algebra.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace njc {

FieldState::FieldState(Eigen::VectorXcd amplitudes, double tail_mass)
    : amplitudes_(std::move(amplitudes)), tail_mass_(tail_mass) {
  if (amplitudes_.size() < 2) throw ValidationError("field state needs at least two Fock levels");
  const double norm2 = amplitudes_.squaredNorm();
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > 1e-12) {
    throw ValidationError("field state is not normalised (norm^2 = " + std::to_string(norm2) + ")");
  }
}

std::vector<double> FieldState::probabilities() const {
  std::vector<double> p(static_cast<std::size_t>(amplitudes_.size()));
  for (Eigen::Index n = 0; n < amplitudes_.size(); ++n) p[n] = std::norm(amplitudes_(n));
  return p;
}

double FieldState::mean_photon_number() const {
  double mean = 0.0;
  for (Eigen::Index n = 0; n < amplitudes_.size(); ++n) {
    mean += static_cast<double>(n) * std::norm(amplitudes_(n));
  }
  return mean;
}

double poisson_log_pmf(double nbar, int n) {
  if (nbar == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  return -nbar + n * std::log(nbar) - std::lgamma(n + 1.0);
}

double poisson_tail(double nbar, int n_max) {
  if (nbar == 0.0) return 0.0;
  if (n_max + 1 <= nbar) {
    // Mode lies beyond the cutoff: the complement is large, plain subtraction is fine.
    double kept = 0.0;
    for (int n = 0; n <= n_max; ++n) kept += std::exp(poisson_log_pmf(nbar, n));
    return std::max(0.0, 1.0 - kept);
  }
  // Terms decrease monotonically past the mode.
  double tail = 0.0;
  for (int n = n_max + 1;; ++n) {
    const double term = std::exp(poisson_log_pmf(nbar, n));
    tail += term;
    if (term <= 1e-18 * tail || term == 0.0) break;
  }
  return tail;
}

FieldState coherent_state(cplx alpha, FockCutoff cutoff) {
  const int dim = cutoff.dim();
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
  const double nbar = std::norm(alpha);
  if (nbar == 0.0) {
    c(0) = 1.0;
    return FieldState(std::move(c), 0.0);
  }
  const double phase = std::arg(alpha);
  for (int n = 0; n < dim; ++n) {
    c(n) = std::polar(std::exp(0.5 * poisson_log_pmf(nbar, n)), phase * n);
  }
  const double tail = poisson_tail(nbar, cutoff.n_max());
  if (tail >= kTailTolerance) {
    throw TailTooHeavy("coherent state with |alpha|^2 = " + std::to_string(nbar) +
                       " loses mass " + std::to_string(tail) + " beyond n_max = " +
                       std::to_string(cutoff.n_max()));
  }
  c /= c.norm();
  return FieldState(std::move(c), tail);
}

FieldState fock_state(int n, FockCutoff cutoff) {
  if (n < 0 || n > cutoff.n_max()) {
    throw IndexBeyondCutoff("Fock index " + std::to_string(n) + " outside 0.." +
                            std::to_string(cutoff.n_max()));
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(cutoff.dim());
  c(n) = 1.0;
  return FieldState(std::move(c), 0.0);
}

cplx expectation(const Eigen::MatrixXcd& op, const FieldState& state) {
  const auto& c = state.amplitudes();
  if (op.rows() != c.size() || op.cols() != c.size()) {
    throw DimensionMismatch("operator is " + std::to_string(op.rows()) + "x" +
                            std::to_string(op.cols()) + ", state has dimension " +
                            std::to_string(c.size()));
  }
  return c.dot(op * c);
}

}  // namespace njc
