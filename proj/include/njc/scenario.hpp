#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "njc/algebra.hpp"
#include "njc/dynamics.hpp"
#include "njc/model.hpp"

namespace njc {

/// Selectable CSV outputs. Each maps to one file with a fixed column schema.
enum class Observable {
  spectrum,             // delta, n, e_plus, e_minus, bare_e, bare_g
  rabi,                 // n, omega_exact, omega_approx, p_n
  inversion,            // t, w, w_t
  photon_distribution,  // t, n, p
  mandel_q,             // t, q
  squeezing,            // t, dx2, dy2
  overlap,              // t, overlap
  overlap_envelope,     // t, envelope_nbar, envelope_shifted
};

std::string_view to_string(Observable o);
std::optional<Observable> parse_observable(std::string_view name);

enum class AtomInit { excited, ground, superposition };
enum class FieldKind { coherent, fock };

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 0.0;
  int samples = 1;

  std::vector<double> points() const;
  bool operator==(const TimeGrid&) const = default;
};

/// A fully validated run description.
struct Scenario {
  std::string name;
  std::string description;
  ModelParams params{1.0, 1.0, 0.0, 0.0};

  AtomInit atom = AtomInit::excited;
  cplx atom_e{1.0, 0.0};
  cplx atom_g{0.0, 0.0};

  FieldKind field = FieldKind::coherent;
  double nbar = 0.0;         ///< |α|² for coherent fields; expansion centre for rabi tables
  double field_phase = 0.0;  ///< arg α
  int fock_n = 0;

  std::optional<int> n_max;  ///< explicit cutoff; otherwise chosen from the field
  TimeGrid time;
  std::vector<Observable> outputs;

  std::vector<int> spectrum_n{1, 2};
  double delta_min = -0.5;
  double delta_max = 1.0;
  int delta_points = 301;

  int rabi_n_max = 200;

  bool operator==(const Scenario&) const = default;

  FockCutoff cutoff() const;
  FieldState initial_field() const;
  InitialCondition initial_condition() const;
};

/// Parses a flat `key = value` document. Lines starting with '#' are
/// comments; lists are comma separated with optional brackets. `delta` may be
/// the word `critical` (uses Δc at nbar). Missing ω, r/delta, atom and field
/// default to 1, 1 (resonance), excited and coherent; outputs default to inversion.
///
/// Throws ParseError for malformed lines, unknown keys, duplicate keys,
/// unreadable numbers and unknown observable names; ValidationError when the
/// values break an invariant (missing name, k outside [0,1], bad time grid…).
Scenario parse_scenario(std::string_view text);

/// Inverse of parse_scenario; numbers are written with 17 significant digits
/// so that parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

struct PresetInfo {
  std::string name;
  std::string description;
};

std::vector<PresetInfo> list_presets();

/// Built-in scenario by name, or nullopt.
std::optional<Scenario> preset(std::string_view name);

/// Command-line adjustments applied on top of a preset or file.
struct Overrides {
  std::optional<int> n_max;
  std::optional<int> samples;
  std::optional<double> delta;
  std::optional<double> g;
  std::optional<double> k;
  std::optional<double> nbar;
};

/// Applies the overrides and re-validates. Throws ValidationError.
Scenario apply_overrides(Scenario scenario, const Overrides& overrides);

}  // namespace njc
