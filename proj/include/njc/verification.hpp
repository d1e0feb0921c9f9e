#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "njc/dynamics.hpp"
#include "njc/model.hpp"

namespace njc {

/// One randomized closed-form vs dense-oracle comparison.
struct OracleScenario {
  ModelParams params;
  double nbar = 0.0;
  cplx alpha;
  cplx atom_e{1.0, 0.0};
  cplx atom_g;
  double t = 0.0;
  std::string label;  ///< e.g. "k=0.5 delta=crit"
};

struct OracleComparison {
  OracleScenario scenario;
  int n_max = 0;
  double max_deviation = 0.0;     ///< max |C_closed − C_oracle| after global-phase alignment
  double norm_error = 0.0;        ///< | ‖ψ_closed‖² − 1 |
  double number_drift = 0.0;      ///< max over both evolvers of |⟨N⟩(t) − ⟨N⟩(0)|
  double energy_drift = 0.0;      ///< oracle |⟨H⟩(t) − ⟨H⟩(0)|
};

struct OracleSuiteReport {
  std::vector<OracleComparison> cases;
  double max_deviation = 0.0;
  double max_norm_error = 0.0;
  double max_number_drift = 0.0;
  double max_energy_drift = 0.0;
};

/// Deterministic draws covering every combination of k ∈ {0, 1e-4, 0.5, 1}
/// and Δ ∈ {0, 0.01, Δc} (Δc needs k > 0; k = 0 reuses 0 or 0.01), with
/// n̄ ∈ [0.5, 40], g log-uniform in [1e-3, 0.2], t ∈ [0, t_max] and random
/// atomic and field phases.
std::vector<OracleScenario> random_oracle_scenarios(std::uint64_t seed, int count,
                                                    double t_max = 1e4);

OracleComparison compare_with_oracle(const OracleScenario& scenario);

OracleSuiteReport run_oracle_suite(std::uint64_t seed, int count, double t_max = 1e4);

}  // namespace njc
