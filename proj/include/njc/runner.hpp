#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "njc/model.hpp"
#include "njc/scenario.hpp"

namespace njc {

/// One output file: a header row plus numeric rows in column order.
struct CsvTable {
  std::string name;                  ///< observable name, used as file suffix
  std::vector<std::string> columns;
  std::vector<bool> integer_column;  ///< printed with %d instead of %.16e
  std::vector<std::vector<double>> rows;
};

/// Renders the table. Floating columns use 17 significant digits in
/// scientific notation so that output is byte-stable. Throws NumericalError
/// on any NaN or infinity.
std::string format_csv(const CsvTable& table);

/// Computes every selected observable. Each time sample is evaluated
/// directly from t = 0.
std::vector<CsvTable> compute_outputs(const Scenario& scenario);

struct RunSummary {
  std::vector<std::filesystem::path> files;  ///< CSVs, then the manifest
  int n_max = 0;
  double tail_mass = 0.0;
  double max_t = 0.0;
  double wall_seconds = 0.0;
};

/// Writes `<out>/<name>_<observable>.csv` for each output and
/// `<out>/<name>_manifest.json`. Throws IoError, NumericalError.
RunSummary run_scenario(const Scenario& scenario, const std::filesystem::path& out_dir);

}  // namespace njc
