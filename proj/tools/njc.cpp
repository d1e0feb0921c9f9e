#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "njc/error.hpp"
#include "njc/runner.hpp"
#include "njc/scenario.hpp"
#include "njc/verification.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

njc::Scenario load(const std::string& target) {
  if (auto s = njc::preset(target)) return *s;
  std::ifstream in(target);
  if (!in) throw njc::IoError("'" + target + "' is neither a preset nor a readable file");
  std::ostringstream text;
  text << in.rdbuf();
  return njc::parse_scenario(text.str());
}

int run(const std::string& target, const std::string& out_dir, const njc::Overrides& overrides) {
  const njc::Scenario scenario = njc::apply_overrides(load(target), overrides);
  const njc::RunSummary summary = njc::run_scenario(scenario, out_dir);
  for (const auto& path : summary.files) std::cout << path.string() << '\n';
  std::printf("cutoff %d, tail mass %.3e, %.2f s\n", summary.n_max, summary.tail_mass,
              summary.wall_seconds);
  return 0;
}

int list() {
  for (const auto& p : njc::list_presets()) {
    std::printf("%-12s %s\n", p.name.c_str(), p.description.c_str());
  }
  return 0;
}

int verify(int count, std::uint64_t seed, double t_max) {
  const njc::OracleSuiteReport report = njc::run_oracle_suite(seed, count, t_max);
  std::printf("scenarios            %zu\n", report.cases.size());
  std::printf("max amplitude dev    %.3e\n", report.max_deviation);
  std::printf("max norm error       %.3e\n", report.max_norm_error);
  std::printf("max <N> drift        %.3e\n", report.max_number_drift);
  std::printf("max <H> drift        %.3e\n", report.max_energy_drift);
  if (report.max_deviation >= 1e-10) {
    std::fprintf(stderr, "error: closed form and oracle differ by more than 1e-10\n");
    return kExitNumerical;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonlinear Jaynes-Cummings simulator (Kerr medium, intensity-dependent coupling)"};
  app.require_subcommand(1);

  std::string target;
  std::string out_dir = "out";
  njc::Overrides overrides;
  auto* run_cmd = app.add_subcommand("run", "Run a preset or scenario file and write CSV output");
  run_cmd->add_option("target", target, "Preset name or scenario file")->required();
  run_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
  run_cmd->add_option("--n-max", overrides.n_max, "Fock cutoff");
  run_cmd->add_option("--samples", overrides.samples, "Number of time samples");
  run_cmd->add_option("--delta", overrides.delta, "Detuning (r - 1) * omega");
  run_cmd->add_option("--g", overrides.g, "Coupling constant");
  run_cmd->add_option("--k", overrides.k, "Deformation parameter in [0, 1]");
  run_cmd->add_option("--nbar", overrides.nbar, "Mean photon number of the coherent field");

  auto* list_cmd = app.add_subcommand("list", "List built-in presets");

  int count = 100;
  std::uint64_t seed = 7;
  double t_max = 1e4;
  auto* verify_cmd =
      app.add_subcommand("verify", "Compare the closed form against dense diagonalisation");
  verify_cmd->add_option("--count", count, "Number of random scenarios")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--t-max", t_max, "Largest evolution time")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*run_cmd) return run(target, out_dir, overrides);
    if (*list_cmd) return list();
    if (*verify_cmd) return verify(count, seed, t_max);
  } catch (const njc::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const njc::NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return kExitNumerical;
  } catch (const njc::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitInvalid;
  } catch (const njc::Error& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kExitInvalid;
  }
  return 0;
}
