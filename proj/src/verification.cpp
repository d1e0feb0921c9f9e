#include "njc/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "njc/oracle.hpp"
#include "njc/spectrum.hpp"

namespace njc {

std::vector<OracleScenario> random_oracle_scenarios(std::uint64_t seed, int count, double t_max) {
  constexpr double kValues[] = {0.0, 1e-4, 0.5, 1.0};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<OracleScenario> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double k = kValues[i % 4];
    int delta_kind = (i / 4) % 3;  // 0: Δ=0, 1: Δ=0.01, 2: Δ=Δc
    if (k == 0.0 && delta_kind == 2) delta_kind = (i / 12) % 2;

    const double nbar = 0.5 + 39.5 * unit(rng);
    const double g = 1e-3 * std::pow(200.0, unit(rng));
    const ModelParams base = ModelParams::from_detuning(0.0, g, k);
    double delta = 0.0;
    std::string dlabel = "0";
    if (delta_kind == 1) {
      delta = 0.01;
      dlabel = "0.01";
    } else if (delta_kind == 2) {
      delta = critical_detuning(base, nbar);
      dlabel = "crit";
    }

    OracleScenario s{base.with_detuning(delta), nbar, {}, {1.0, 0.0}, {}, t_max * unit(rng), {}};
    s.alpha = std::polar(std::sqrt(nbar), 2.0 * std::numbers::pi * unit(rng));
    switch (i % 3) {
      case 0: break;
      case 1: s.atom_e = 0.0; s.atom_g = 1.0; break;
      default: {
        const double theta = 0.5 * std::numbers::pi * unit(rng);
        s.atom_e = std::cos(theta);
        s.atom_g = std::polar(std::sin(theta), 2.0 * std::numbers::pi * unit(rng));
      }
    }
    s.label = "k=" + std::to_string(k) + " delta=" + dlabel;
    out.push_back(std::move(s));
  }
  return out;
}

OracleComparison compare_with_oracle(const OracleScenario& s) {
  const FockCutoff cutoff = FockCutoff::for_coherent(s.nbar);
  const InitialCondition init =
      InitialCondition::superposition(s.atom_e, s.atom_g, coherent_state(s.alpha, cutoff));

  const AtomFieldState closed = evolve_closed_form(s.params, init, s.t);
  const DenseOracle oracle(s.params, cutoff);
  const AtomFieldState brute = oracle.evolve(init, s.t);

  OracleComparison cmp{s};
  cmp.n_max = cutoff.n_max();

  const cplx overlap = inner_product(brute, closed);
  const cplx align = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx(1.0);
  const Eigen::VectorXcd diff = to_product_vector(closed) - align * to_product_vector(brute);
  cmp.max_deviation = diff.cwiseAbs().maxCoeff();
  cmp.norm_error = std::abs(closed.norm_squared() - 1.0);

  const Eigen::MatrixXcd number = constant_of_motion_matrix(s.params, cutoff);
  const AtomFieldState start = initial_state(init);
  const double n0 = expectation(number, start).real();
  cmp.number_drift = std::max(std::abs(expectation(number, closed).real() - n0),
                              std::abs(expectation(number, brute).real() - n0));
  cmp.energy_drift =
      static_cast<double>(std::abs(oracle.energy(init, s.t) - oracle.energy(init, 0.0)));
  return cmp;
}

OracleSuiteReport run_oracle_suite(std::uint64_t seed, int count, double t_max) {
  OracleSuiteReport report;
  for (const OracleScenario& s : random_oracle_scenarios(seed, count, t_max)) {
    OracleComparison c = compare_with_oracle(s);
    report.max_deviation = std::max(report.max_deviation, c.max_deviation);
    report.max_norm_error = std::max(report.max_norm_error, c.norm_error);
    report.max_number_drift = std::max(report.max_number_drift, c.number_drift);
    report.max_energy_drift = std::max(report.max_energy_drift, c.energy_drift);
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace njc
