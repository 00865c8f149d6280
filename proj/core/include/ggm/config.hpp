#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ggm/experiments.hpp"
#include "ggm/hamiltonian.hpp"
#include "ggm/lanczos.hpp"
#include "ggm/propagator.hpp"

namespace ggm {

// Bad or inconsistent configuration input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads {n, alpha, jx, jy, delta} from a JSON object; alpha accepts a number
// or the string "nn".
ModelParams model_params_from_json(const std::string& json_text);

// Fully resolved settings for one scan or quench run. Config keys are flat:
//   n, regime ("FM"|"AFM"), alpha (number, "nn", or list),
//   delta (number, list, or {min,max,step}), times (list or {max,step}),
//   tolerance, max_krylov_dim, seed, degeneracy_tol,
//   krylov_dim, step_tolerance, max_substeps, out, workers.
struct RunSettings {
  std::string command;  // "ground-scan" or "quench"
  int n_sites = 0;      // filled by defaults per command
  Regime regime = Regime::kAFM;
  std::vector<AlphaValue> alphas;
  std::vector<double> deltas;
  std::vector<double> times;
  LanczosOpts solver;
  PropagatorOpts propagator;
  std::string out;
  int workers = 1;
};

// CLI override flags; taken verbatim before defaults are applied.
struct RunOverrides {
  std::optional<int> n;
  std::optional<std::string> alpha;   // comma list, entries numeric or "nn"
  std::optional<std::string> delta;   // comma list
  std::optional<std::string> regime;  // FM | AFM
  std::optional<std::string> out;
  std::optional<int> workers;
};

// json_text may be empty (defaults only). Throws ConfigError on anything the
// run could not honor exactly. default_workers seeds the worker count before
// config and flag overrides (the CLI passes $GGM_WORKERS here).
RunSettings resolve_run_settings(const std::string& command, const std::string& json_text,
                                 const RunOverrides& overrides, int default_workers = 1);

RunSettings load_run_settings(const std::string& command,
                              const std::optional<std::filesystem::path>& config_path,
                              const RunOverrides& overrides, int default_workers = 1);

// Run manifest JSON: resolved config, seeds, tool version, wall time.
std::string manifest_json(const RunSettings& settings, double wall_seconds);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace ggm
