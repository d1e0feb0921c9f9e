#include "njc/spectrum.hpp"

#include <cmath>
#include <string>
#include <tuple>

#include "njc/error.hpp"

namespace njc {

namespace {

void require_nonnegative(double n) {
  if (!(n >= 0.0)) throw InvalidArgument("block index must be >= 0");
}

// 4g²ω²(1+n)(1+kn)
double coupling_term(const ModelParams& p, double n) {
  const double go = p.g() * p.omega();
  return 4.0 * go * go * (1.0 + n) * (1.0 + p.k() * n);
}

}  // namespace

double block_detuning(const ModelParams& params, double n) {
  require_nonnegative(n);
  return params.detuning() - 2.0 * params.k() * n * params.omega();
}

double block_coupling(const ModelParams& params, double n) {
  require_nonnegative(n);
  return params.g() * params.omega() * std::sqrt((1.0 + n) * (1.0 + params.k() * n));
}

double rabi_frequency(const ModelParams& params, double n) {
  const double dn = block_detuning(params, n);
  return std::sqrt(dn * dn + coupling_term(params, n));
}

double mixing_weight(const ModelParams& params, double n) {
  const double c4 = coupling_term(params, n);
  if (c4 == 0.0) return 0.0;
  const double dn = block_detuning(params, n);
  return c4 / (dn * dn + c4);
}

double rabi_frequency_slope(const ModelParams& params, double n) {
  const double w = params.omega();
  const double k = params.k();
  const double g2w2 = params.g() * params.g() * w * w;
  // d(Ω²)/dn / (2Ω)
  const double d_omega2 =
      -4.0 * k * w * block_detuning(params, n) + 4.0 * g2w2 * (1.0 + k + 2.0 * k * n);
  return d_omega2 / (2.0 * rabi_frequency(params, n));
}

double rabi_frequency_curvature(const ModelParams& params, double n) {
  const double w = params.omega();
  const double k = params.k();
  // Ω² is quadratic in n with leading coefficient A = 4(k²ω² + kg²ω²).
  const double a = 4.0 * (k * k * w * w + k * params.g() * params.g() * w * w);
  const double slope = rabi_frequency_slope(params, n);
  return (a - slope * slope) / rabi_frequency(params, n);
}

double critical_detuning(const ModelParams& params, double n_bar) {
  const double k = params.k();
  if (k == 0.0) throw KerrTermRequired("Rabi frequency has no minimum in n when k = 0");
  const double w = params.omega();
  const double g = params.g();
  return 2.0 * k * w * n_bar + g * g * w * (1.0 + k + 2.0 * k * n_bar) / k;
}

double rabi_approx(const ModelParams& params, double n, double n_bar) {
  const double w = params.omega();
  const double k = params.k();
  const double g = params.g();
  const double center = rabi_frequency(params, n_bar);
  const double m = n - n_bar;
  return center + 2.0 * m * m * (k * k * w * w + k * g * g * w * w) / center;
}

BareEnergies bare_energies(const ModelParams& params, int n) {
  require_nonnegative(n);
  const double rn = n;
  const double field = (rn + params.k() * rn * rn - params.k() * rn) * params.omega();
  return {field + 0.5 * params.nu(), field - 0.5 * params.nu()};
}

std::pair<double, double> dressed_energies(const ModelParams& params, int n) {
  require_nonnegative(n);
  const double rn = n;
  const double center = (params.k() * rn * rn + rn + 0.5) * params.omega();
  const double half_gap = 0.5 * rabi_frequency(params, rn);
  return {center + half_gap, center - half_gap};
}

DressedMode dressed_mode(const ModelParams& params, int n) {
  require_nonnegative(n);
  DressedMode mode;
  mode.n = n;
  mode.delta_n = block_detuning(params, n);
  mode.omega_n = rabi_frequency(params, n);
  if (mode.omega_n == 0.0) {
    throw DegenerateBlock("block n = " + std::to_string(n) +
                          " has zero Rabi frequency; mixing angle undefined");
  }
  std::tie(mode.e_plus, mode.e_minus) = dressed_energies(params, n);

  // tan θn = (Ωn − Δn)/(2c) = 2c/(Ωn + Δn)
  const double two_c = 2.0 * block_coupling(params, n);
  if (mode.delta_n >= 0.0) {
    const double t = two_c / (mode.omega_n + mode.delta_n);
    const double h = std::hypot(1.0, t);
    mode.cos_theta = 1.0 / h;
    mode.sin_theta = t / h;
  } else {
    const double cot = two_c / (mode.omega_n - mode.delta_n);
    const double h = std::hypot(1.0, cot);
    mode.cos_theta = cot / h;
    mode.sin_theta = 1.0 / h;
  }
  return mode;
}

std::vector<SpectrumRow> spectrum_sweep(const ModelParams& base, std::span<const int> n_list,
                                        std::span<const double> delta_grid) {
  if (n_list.empty() || delta_grid.empty()) throw EmptyGrid("spectrum sweep needs nonempty grids");
  std::vector<SpectrumRow> rows;
  rows.reserve(n_list.size() * delta_grid.size());
  for (double delta : delta_grid) {
    const ModelParams p = base.with_detuning(delta);
    for (int n : n_list) {
      const auto [ep, em] = dressed_energies(p, n);
      rows.push_back({delta, n, ep, em, bare_energies(p, n).e_excited,
                      bare_energies(p, n + 1).e_ground});
    }
  }
  return rows;
}

}  // namespace njc
