#include "njc/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "njc/algebra.hpp"
#include "njc/dynamics.hpp"
#include "njc/error.hpp"
#include "njc/observables.hpp"
#include "njc/spectrum.hpp"

namespace njc {

namespace {

CsvTable make_table(Observable o, std::vector<std::string> columns, std::vector<bool> integer) {
  return CsvTable{std::string(to_string(o)), std::move(columns), std::move(integer), {}};
}

CsvTable spectrum_table(const Scenario& s) {
  CsvTable t = make_table(Observable::spectrum,
                          {"delta", "n", "e_plus", "e_minus", "bare_e", "bare_g"},
                          {false, true, false, false, false, false});
  const std::vector<double> deltas = TimeGrid{s.delta_min, s.delta_max, s.delta_points}.points();
  for (const SpectrumRow& r : spectrum_sweep(s.params, s.spectrum_n, deltas)) {
    t.rows.push_back({r.delta, static_cast<double>(r.n), r.e_plus, r.e_minus, r.bare_e, r.bare_g});
  }
  return t;
}

CsvTable rabi_table(const Scenario& s) {
  CsvTable t = make_table(Observable::rabi, {"n", "omega_exact", "omega_approx", "p_n"},
                          {true, false, false, false});
  for (int n = 0; n <= s.rabi_n_max; ++n) {
    const double p = s.nbar > 0.0 ? std::exp(poisson_log_pmf(s.nbar, n)) : (n == 0 ? 1.0 : 0.0);
    t.rows.push_back({static_cast<double>(n), rabi_frequency(s.params, n),
                      rabi_approx(s.params, n, s.nbar), p});
  }
  return t;
}

bool needs_state(Observable o) {
  return o == Observable::inversion || o == Observable::photon_distribution ||
         o == Observable::mandel_q || o == Observable::squeezing || o == Observable::overlap;
}

}  // namespace

std::string format_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out += (c ? "," : "") + table.columns[c];
  }
  out += '\n';
  char buf[64];
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw DimensionMismatch("row width differs from the header in " + table.name);
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!std::isfinite(row[c])) {
        throw NumericalError("non-finite value in column '" + table.columns[c] + "' of " +
                             table.name);
      }
      if (table.integer_column[c]) {
        std::snprintf(buf, sizeof buf, "%d", static_cast<int>(std::lround(row[c])));
      } else {
        std::snprintf(buf, sizeof buf, "%.16e", row[c] == 0.0 ? 0.0 : row[c]);
      }
      if (c) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::vector<CsvTable> compute_outputs(const Scenario& s) {
  std::vector<CsvTable> tables;
  bool time_dependent = false;
  for (Observable o : s.outputs) {
    switch (o) {
      case Observable::spectrum: tables.push_back(spectrum_table(s)); break;
      case Observable::rabi: tables.push_back(rabi_table(s)); break;
      case Observable::inversion:
        tables.push_back(make_table(o, {"t", "w", "w_t"}, {false, false, false}));
        time_dependent = true;
        break;
      case Observable::photon_distribution:
        tables.push_back(make_table(o, {"t", "n", "p"}, {false, true, false}));
        time_dependent = true;
        break;
      case Observable::mandel_q:
        tables.push_back(make_table(o, {"t", "q"}, {false, false}));
        time_dependent = true;
        break;
      case Observable::squeezing:
        tables.push_back(make_table(o, {"t", "dx2", "dy2"}, {false, false, false}));
        time_dependent = true;
        break;
      case Observable::overlap:
        tables.push_back(make_table(o, {"t", "overlap"}, {false, false}));
        time_dependent = true;
        break;
      case Observable::overlap_envelope:
        tables.push_back(make_table(o, {"t", "envelope_nbar", "envelope_shifted"},
                                    {false, false, false}));
        time_dependent = true;
        break;
    }
  }
  if (!time_dependent) return tables;

  const ModelParams& p = s.params;
  const InitialCondition init = s.initial_condition();
  const FieldState& field = init.field();
  const AtomFieldState start = initial_state(init);
  const bool series_overlap = s.field == FieldKind::coherent && init.is_excited();
  const cplx alpha = std::polar(std::sqrt(s.nbar), s.field_phase);
  const double shifted_n = s.nbar + std::sqrt(s.nbar);

  for (double t : s.time.points()) {
    AtomFieldState state;
    bool have_state = false;
    for (CsvTable& table : tables) {
      const Observable o = *parse_observable(table.name);
      if (needs_state(o) && !have_state) {
        state = evolve_closed_form(p, init, t);
        have_state = true;
      }
      switch (o) {
        case Observable::inversion: {
          const InversionRecord r = inversion_series(p, field, t);
          table.rows.push_back({t, inversion_from_state(state), r.w_t});
          break;
        }
        case Observable::photon_distribution: {
          const auto dist = photon_distribution(state);
          for (std::size_t n = 0; n < dist.size(); ++n) {
            table.rows.push_back({t, static_cast<double>(n), dist[n]});
          }
          break;
        }
        case Observable::mandel_q:
          table.rows.push_back({t, mandel_q(photon_distribution(state))});
          break;
        case Observable::squeezing: {
          const QuadratureVariances v = quadrature_variances(state);
          table.rows.push_back({t, v.dx2, v.dy2});
          break;
        }
        case Observable::overlap: {
          const double value =
              series_overlap ? overlap(p, alpha, t, field.cutoff())
                             : overlap_from_states(start, to_block_frame(p, state));
          table.rows.push_back({t, value});
          break;
        }
        case Observable::overlap_envelope:
          try {
            table.rows.push_back({t, overlap_envelope(p, s.nbar, s.nbar, t),
                                  overlap_envelope(p, s.nbar, shifted_n, t)});
          } catch (const InvalidArgument& e) {
            throw ValidationError(std::string("overlap_envelope undefined here: ") + e.what());
          }
          break;
        case Observable::spectrum:
        case Observable::rabi:
          break;
      }
    }
  }
  return tables;
}

RunSummary run_scenario(const Scenario& s, const std::filesystem::path& out_dir) {
  const auto started = std::chrono::steady_clock::now();
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  const FieldState field = s.initial_field();
  RunSummary summary;
  summary.n_max = field.n_max();
  summary.tail_mass = field.tail_mass();
  summary.max_t = s.time.t_end;

  auto write = [&](const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.close();
    if (!out) throw IoError("write failed: " + path.string());
    summary.files.push_back(path);
  };

  for (const CsvTable& table : compute_outputs(s)) {
    write(out_dir / (s.name + "_" + table.name + ".csv"), format_csv(table));
  }

  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  nlohmann::ordered_json outputs = nlohmann::ordered_json::array();
  for (Observable o : s.outputs) outputs.push_back(std::string(to_string(o)));
  nlohmann::ordered_json manifest;
  manifest["scenario"] = {
      {"name", s.name},
      {"description", s.description},
      {"omega", s.params.omega()},
      {"r", s.params.r()},
      {"delta", s.params.detuning()},
      {"g", s.params.g()},
      {"k", s.params.k()},
      {"nbar", s.nbar},
      {"outputs", outputs},
      {"config", serialize_scenario(s)},
  };
  manifest["cutoff"] = summary.n_max;
  manifest["tail_mass"] = summary.tail_mass;
  manifest["max_t"] = summary.max_t;
  manifest["wall_seconds"] = summary.wall_seconds;
  write(out_dir / (s.name + "_manifest.json"), manifest.dump(2) + "\n");
  return summary;
}

}  // namespace njc
