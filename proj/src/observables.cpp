#include "njc/observables.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "njc/error.hpp"
#include "njc/spectrum.hpp"

namespace njc {

double inversion_from_state(const AtomFieldState& state) {
  return state.c_e.squaredNorm() - state.c_g.squaredNorm();
}

InversionRecord inversion_series(const ModelParams& params, const FieldState& initial_field,
                                 double t) {
  const std::vector<double> p = initial_field.probabilities();
  const int n_max = initial_field.n_max();
  double oscillating = 0.0;
  double offset = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const double weight = p[n] * mixing_weight(params, n);
    oscillating += weight * std::cos(rabi_frequency(params, n) * t);
    offset += weight;
  }
  return {t, 1.0 + oscillating - offset, oscillating};
}

std::vector<InversionRecord> inversion(const ModelParams& params,
                                       std::span<const AtomFieldState> states,
                                       const FieldState& initial_field) {
  std::vector<InversionRecord> out;
  out.reserve(states.size());
  for (const AtomFieldState& s : states) {
    InversionRecord r = inversion_series(params, initial_field, s.time);
    r.w = inversion_from_state(s);
    out.push_back(r);
  }
  return out;
}

RevivalEstimate revival_estimate(const ModelParams& params, double n_bar) {
  if (!(n_bar > 0.0)) throw InvalidArgument("revival estimate needs a mean photon number > 0");
  const double w = params.omega();
  const double k = params.k();
  const double g2 = params.g() * params.g();
  RevivalEstimate est;
  est.const_a = 4.0 * (k * k * w * w + k * g2 * w * w);
  est.const_b = 4.0 * (g2 * w * w + k * g2 * w * w - params.detuning() * k * w);
  const double denom = 2.0 * est.const_a * n_bar + est.const_a + est.const_b;
  if (std::abs(denom) < 1e-30) {
    throw NoRevivalScale("neighbouring Rabi frequencies coincide at n = " +
                         std::to_string(n_bar) + "; revival time diverges");
  }
  est.t_revival = 4.0 * std::numbers::pi * rabi_frequency(params, n_bar) / std::abs(denom);
  est.t_collapse = est.t_revival / (4.0 * std::numbers::pi * std::sqrt(n_bar));
  return est;
}

double su11_resonant_wt(const ModelParams& params, double n_bar, double t) {
  const double phase = params.omega() * t;
  return params.g() * params.g() * std::exp(n_bar * (std::cos(phase) - 1.0)) *
         std::cos(n_bar * std::sin(phase));
}

std::vector<double> photon_distribution(const ModelParams& params,
                                        const FieldState& initial_field, double t) {
  const std::vector<double> p = initial_field.probabilities();
  const int n_max = initial_field.n_max();
  std::vector<double> out(p.size(), 0.0);
  for (int n = 0; n <= n_max; ++n) {
    if (n == n_max) {
      out[n] += p[n];  // top block is uncoupled inside the cutoff
      break;
    }
    const double s = std::sin(0.5 * rabi_frequency(params, n) * t);
    const double transferred = p[n] * mixing_weight(params, n) * s * s;
    out[n] += p[n] - transferred;
    out[n + 1] += transferred;
  }
  return out;
}

std::vector<double> photon_distribution_single_index(const ModelParams& params,
                                                     const FieldState& initial_field, double t) {
  const std::vector<double> p = initial_field.probabilities();
  std::vector<double> out(p.size(), 0.0);
  for (std::size_t n = 0; n < p.size(); ++n) {
    const double om = rabi_frequency(params, n);
    const double dn = block_detuning(params, n);
    const double s = mixing_weight(params, n);
    const double static_part = om > 0.0 ? dn * dn / (om * om) : 1.0;
    out[n] = 0.5 * p[n] * (1.0 + static_part + s * std::cos(om * t));
  }
  return out;
}

std::vector<double> photon_distribution(const AtomFieldState& state) {
  std::vector<double> out(static_cast<std::size_t>(state.c_e.size()));
  for (Eigen::Index n = 0; n < state.c_e.size(); ++n) {
    out[n] = std::norm(state.c_e(n)) + std::norm(state.c_g(n));
  }
  return out;
}

double mandel_q(std::span<const double> distribution) {
  double total = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
  for (std::size_t n = 0; n < distribution.size(); ++n) {
    const double rn = static_cast<double>(n);
    total += distribution[n];
    m1 += rn * distribution[n];
    m2 += rn * rn * distribution[n];
  }
  if (std::abs(total - 1.0) > 1e-8) {
    throw InvalidArgument("photon distribution sums to " + std::to_string(total));
  }
  if (m1 <= 0.0) throw VacuumOnly("Mandel Q is undefined for the vacuum");
  return (m2 - m1 * m1) / m1;
}

FieldMoments field_moments(const AtomFieldState& state) {
  FieldMoments m;
  const Eigen::Index dim = state.c_e.size();
  for (Eigen::Index n = 0; n < dim; ++n) {
    const double rn = static_cast<double>(n);
    const double pn = std::norm(state.c_e(n)) + std::norm(state.c_g(n));
    m.mean_n += rn * pn;
    m.mean_n2 += rn * rn * pn;
    if (n + 1 < dim) {
      m.mean_a += std::sqrt(rn + 1.0) * (std::conj(state.c_e(n)) * state.c_e(n + 1) +
                                         std::conj(state.c_g(n)) * state.c_g(n + 1));
    }
    if (n + 2 < dim) {
      m.mean_a2 += std::sqrt((rn + 1.0) * (rn + 2.0)) *
                   (std::conj(state.c_e(n)) * state.c_e(n + 2) +
                    std::conj(state.c_g(n)) * state.c_g(n + 2));
    }
  }
  return m;
}

QuadratureVariances quadrature_variances(const AtomFieldState& state) {
  const FieldMoments m = field_moments(state);
  const double a_sq = (m.mean_a * m.mean_a).real();  // (⟨a⟩² + ⟨a†⟩²)/2
  const double a_abs = std::norm(m.mean_a);          // ⟨a†⟩⟨a⟩
  const double a2 = m.mean_a2.real();                // (⟨a²⟩ + ⟨a†²⟩)/2
  return {0.5 * (1.0 + 2.0 * m.mean_n + 2.0 * a2 - 2.0 * a_sq - 2.0 * a_abs),
          0.5 * (1.0 + 2.0 * m.mean_n - 2.0 * a2 + 2.0 * a_sq - 2.0 * a_abs)};
}

double overlap(const ModelParams& params, cplx alpha, double t, FockCutoff cutoff) {
  const double nbar = std::norm(alpha);
  cplx sum = 0.0;
  for (int n = 0; n <= cutoff.n_max(); ++n) {
    const double weight = std::exp(poisson_log_pmf(nbar, n));
    if (weight == 0.0) continue;
    const double om = rabi_frequency(params, n);
    const double dn = block_detuning(params, n);
    const double ratio_sin = om > 0.0 ? (dn / om) * std::sin(0.5 * om * t) : 0.5 * dn * t;
    sum += weight * cplx(std::cos(0.5 * om * t), ratio_sin);
  }
  return std::norm(sum);
}

double overlap(const ModelParams& params, cplx alpha, double t) {
  return overlap(params, alpha, t, FockCutoff::for_coherent(std::norm(alpha)));
}

double overlap_from_states(const AtomFieldState& a, const AtomFieldState& b) {
  return std::norm(inner_product(a, b));
}

double overlap_envelope(const ModelParams& params, double n_bar, double big_n, double t) {
  if (big_n < n_bar) throw InvalidArgument("expansion point N must not be below n_bar");
  const double n2 = big_n * big_n;
  const double bracket = 1.0 + n2 * rabi_frequency_curvature(params, big_n) * t * t / 4.0;
  if (!(bracket > 0.0)) {
    throw InvalidArgument("overlap envelope expansion breaks down (negative curvature term)");
  }
  return std::pow(bracket, -0.25) *
         std::exp(-n2 * rabi_frequency_slope(params, big_n) * t * t / 4.0);
}

}  // namespace njc
