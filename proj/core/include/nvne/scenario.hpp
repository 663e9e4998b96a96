#ifndef NVNE_SCENARIO_HPP
#define NVNE_SCENARIO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nvne/soliton.hpp"

namespace nvne {

/// Configuration problem: bad file, bad field, or a parameter that fails
/// its documented precondition. Maps to exit code 2 in the CLI.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// One scenario: model + seed parameters, nonlinearity, Darboux vector,
/// time grid, optional field block, output paths, and check tolerances.
struct ScenarioConfig {
  enum class Model { HO, HA, Custom };

  Model model = Model::HO;
  int n = 1;            // HA principal quantum number
  double B = 1.0;       // HO/HA energy scale
  double alpha = 0.0;   // Re mu (HO only; profiles require 0)
  double beta = 0.3;    // Im mu
  double rho3 = 1.0 / 3.0;
  std::array<double, 3> levels{0.0, 0.0, 0.0};  // custom model

  Nonlinearity f = Nonlinearity::power(2);
  Complex gamma1{1.0, 0.0};
  Complex gamma3{1.0, 0.0};
  TimeGrid grid = TimeGrid::make(-17.0, 17.0, 201);

  bool has_field = false;
  double v = 0.5;
  double c = 1.0;
  bool solve_amplitude = true;
  double Ex0 = 0.0;
  double Ey0 = 0.0;

  std::string solution_csv = "solution.csv";
  std::string series_csv;  // tidy long-format; empty = skip
  std::string report_path = "report.txt";

  double tol_nvne = 1e-6;
  double fd_delta = 1e-5;
  double tol_isospectral = 1e-10;
  double tol_closed_form = 1e-10;
  double tol_profile = 1e-10;
  double tol_factorization = 1e-10;
  double tol_maxwell_constraint = 1e-8;
  double tol_maxwell_pde = 1e-4;
  InvariantTolerances inv_tol;

  static ScenarioConfig from_json_text(const std::string& text);
  static ScenarioConfig from_json_file(const std::string& path);
};

struct ScenarioResult {
  int exit_code = 0;  // 0 pass, 1 check failures, 2 config/setup error
  VerificationReport report;
  std::vector<std::string> artifacts;  // files written
  std::string error;                   // set when exit_code == 2
};

/// Full pipeline: build, sample, export, verify. write_outputs = false
/// runs the checks only (the `verify` subcommand).
ScenarioResult run_scenario(const ScenarioConfig& config,
                            bool write_outputs = true);

/// CSV with header `t, re_11, im_11, re_12, ...`: row-major upper triangle
/// including the diagonal, 17 significant digits, one row per grid point.
void export_timeseries(const std::vector<double>& times,
                       const std::vector<CMatrix>& states,
                       const std::string& path);

struct Timeseries {
  std::vector<double> times;
  std::vector<CMatrix> states;
};
/// Reads a file produced by export_timeseries back into full matrices.
Timeseries read_timeseries(const std::string& path);

/// Tidy long-format series (`t, series, value`) for plotting.
struct LongSeries {
  std::string name;
  std::vector<double> values;  // one per grid point
};
void export_long_series(const std::vector<double>& times,
                        const std::vector<LongSeries>& series,
                        const std::string& path);

/// Writes the bundled example configurations (ho_quadratic.json,
/// ha_quadratic.json) into a directory; returns the paths.
std::vector<std::string> export_example_configs(const std::string& directory);

}  // namespace nvne

#endif  // NVNE_SCENARIO_HPP
