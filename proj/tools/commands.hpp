#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imrel/economics.hpp"
#include "imrel/history.hpp"
#include "imrel/selection.hpp"
#include "imrel/simulator.hpp"

namespace imrel::cli {

// exit codes shared by all commands
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitFit = 3;
inline constexpr int kExitInfeasible = 4;

struct ComponentConfig {
  std::string component_id;
  CostParams costs;
  std::optional<ModelSpec> model_spec;      // model override
  std::optional<ModelParams> model_params;
  double current_interval_hours = 0.0;
};

struct ReferenceRow {  // optional external cross-check rows for optimize runs
  std::vector<double> intervals_days;
  double cost = 0.0;
  double reliability = 0.0;
};

struct RunConfig {
  std::string input_csv;
  std::vector<ComponentConfig> components;
  double rp_hours = 0.0;
  std::vector<double> bounds_hours = {0.0, 0.0};  // box, defaults to (0, RP]
  int weight_grid = 201;
  std::uint64_t seed = 0;
  std::string output_dir = ".";
  int series_terms = 64;
  double series_accuracy = 1e-9;
  std::vector<ReferenceRow> reference_rows;
  std::string raw_text;  // canonical text for the manifest hash
};

RunConfig load_run_config(const std::string& path);
SimConfig load_sim_config(const std::string& path, std::string* raw_text = nullptr);

struct FitArgs {
  std::string input_path;
  std::string unit = "hours";
  std::vector<std::string> models;  // empty = all four
  bool with_lcv = false;
  bool with_winners = false;  // select command
  std::string out_dir = ".";
};

struct CurvesArgs {
  std::string config_path;
  double grid_min_hours = 0.0;  // 0 = auto (RP/100)
  double grid_max_hours = 0.0;  // 0 = RP
  int grid_points = 100;
  std::string out_dir;  // empty = config output_dir
};

struct OptimizeArgs {
  std::string config_path;
  int weights = 0;  // 0 = config weight_grid
  std::string out_dir;
};

struct SimulateArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
};

int cmd_fit(const FitArgs& args);
int cmd_curves(const CurvesArgs& args);
int cmd_optimize(const OptimizeArgs& args);
int cmd_simulate(const SimulateArgs& args);

// Assemble per-component steady evaluators from a config, fitting the input
// fleet where no model override is given.
std::vector<Component> build_components(const RunConfig& cfg,
                                        std::vector<std::string>* ids = nullptr);

void write_file_atomic(const std::string& path, const std::string& content);
std::string format_double(double v);
std::uint64_t fnv1a64(const std::string& text);

}  // namespace imrel::cli
