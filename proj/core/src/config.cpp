#include "ggm/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ggm/version.hpp"

namespace ggm {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON config: ") + e.what());
  }
}

AlphaValue alpha_from_json(const json& node) {
  if (node.is_string()) {
    if (node.get<std::string>() == "nn") return AlphaValue::nearest_neighbor();
    throw ConfigError("alpha must be a positive number or \"nn\"");
  }
  if (node.is_number()) {
    const double a = node.get<double>();
    if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("alpha must be > 0 and finite");
    return AlphaValue::power_law(a);
  }
  throw ConfigError("alpha must be a positive number or \"nn\"");
}

std::vector<AlphaValue> alpha_list_from_json(const json& node) {
  std::vector<AlphaValue> out;
  if (node.is_array()) {
    for (const json& item : node) out.push_back(alpha_from_json(item));
  } else {
    out.push_back(alpha_from_json(node));
  }
  if (out.empty()) throw ConfigError("alpha list must be nonempty");
  return out;
}

std::vector<double> grid_from_json(const json& node, const char* what) {
  std::vector<double> out;
  if (node.is_array()) {
    for (const json& item : node) {
      if (!item.is_number()) throw ConfigError(std::string(what) + " entries must be numbers");
      out.push_back(item.get<double>());
    }
  } else if (node.is_number()) {
    out.push_back(node.get<double>());
  } else if (node.is_object()) {
    const double min = node.value("min", 0.0);
    const double max = node.at("max").get<double>();
    const double step = node.at("step").get<double>();
    if (!(step > 0.0) || max < min) {
      throw ConfigError(std::string(what) + " range needs step > 0 and max >= min");
    }
    const int count = static_cast<int>(std::floor((max - min) / step + 1e-9)) + 1;
    for (int i = 0; i < count; ++i) out.push_back(min + i * step);
  } else {
    throw ConfigError(std::string(what) + " must be a number, list, or {min,max,step} range");
  }
  if (out.empty()) throw ConfigError(std::string(what) + " list must be nonempty");
  for (double v : out) {
    if (!std::isfinite(v)) throw ConfigError(std::string(what) + " entries must be finite");
  }
  return out;
}

Regime regime_from_string(const std::string& s) {
  if (s == "FM" || s == "fm") return Regime::kFM;
  if (s == "AFM" || s == "afm") return Regime::kAFM;
  throw ConfigError("regime must be FM or AFM, got \"" + s + "\"");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, ',')) parts.push_back(item);
  return parts;
}

double parse_number(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("cannot parse ") + what + " value \"" + s + "\"");
  }
}

}  // namespace

ModelParams model_params_from_json(const std::string& json_text) {
  const json cfg = parse(json_text);
  if (!cfg.is_object()) throw ConfigError("model config must be a JSON object");
  ModelParams params;
  try {
    params.n_sites = cfg.at("n").get<int>();
    const AlphaValue alpha = alpha_from_json(cfg.at("alpha"));
    params.alpha = alpha.value;
    params.nn_only = alpha.nn_only;
    params.jx = cfg.value("jx", 1.0);
    params.jy = cfg.value("jy", 1.0);
    params.delta = cfg.value("delta", 0.0);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("model config: ") + e.what());
  }
  try {
    validate(params);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return params;
}

RunSettings resolve_run_settings(const std::string& command, const std::string& json_text,
                                 const RunOverrides& overrides, int default_workers) {
  const bool quench = command == "quench";
  if (!quench && command != "ground-scan") {
    throw ConfigError("unknown command \"" + command + "\"");
  }
  RunSettings s;
  s.command = command;
  s.workers = std::max(default_workers, 1);
  // Desk-scale defaults: the ground grid spans 0 <= delta <= 2 in steps of
  // 0.05 for integer alpha 1..10; quenches run the four-range comparison at
  // the two off-center anisotropies.
  s.n_sites = quench ? 10 : 12;
  if (quench) {
    s.alphas = {AlphaValue::power_law(1), AlphaValue::power_law(2), AlphaValue::power_law(5),
                AlphaValue::power_law(10)};
    s.deltas = {0.5, 1.75};
    for (int i = 0; i <= 100; ++i) s.times.push_back(0.05 * i);
  } else {
    for (int a = 1; a <= 10; ++a) s.alphas.push_back(AlphaValue::power_law(a));
    for (int i = 0; i <= 40; ++i) s.deltas.push_back(0.05 * i);
  }
  s.out = quench ? "quench.csv" : "ground.csv";

  if (!json_text.empty()) {
    const json cfg = parse(json_text);
    if (!cfg.is_object()) throw ConfigError("run config must be a JSON object");
    try {
      if (cfg.contains("n")) s.n_sites = cfg.at("n").get<int>();
      if (cfg.contains("regime")) s.regime = regime_from_string(cfg.at("regime").get<std::string>());
      if (cfg.contains("alpha")) s.alphas = alpha_list_from_json(cfg.at("alpha"));
      if (cfg.contains("delta")) s.deltas = grid_from_json(cfg.at("delta"), "delta");
      if (cfg.contains("times")) s.times = grid_from_json(cfg.at("times"), "times");
      if (cfg.contains("tolerance")) s.solver.tolerance = cfg.at("tolerance").get<double>();
      if (cfg.contains("max_krylov_dim")) s.solver.max_krylov_dim = cfg.at("max_krylov_dim").get<int>();
      if (cfg.contains("seed")) s.solver.seed = cfg.at("seed").get<std::uint64_t>();
      if (cfg.contains("degeneracy_tol")) s.solver.degeneracy_tol = cfg.at("degeneracy_tol").get<double>();
      if (cfg.contains("krylov_dim")) s.propagator.krylov_dim = cfg.at("krylov_dim").get<int>();
      if (cfg.contains("step_tolerance")) s.propagator.step_tolerance = cfg.at("step_tolerance").get<double>();
      if (cfg.contains("max_substeps")) s.propagator.max_substeps = cfg.at("max_substeps").get<long>();
      if (cfg.contains("out")) s.out = cfg.at("out").get<std::string>();
      if (cfg.contains("workers")) s.workers = cfg.at("workers").get<int>();
    } catch (const json::exception& e) {
      throw ConfigError(std::string("run config: ") + e.what());
    }
  }

  if (overrides.n) s.n_sites = *overrides.n;
  if (overrides.regime) s.regime = regime_from_string(*overrides.regime);
  if (overrides.alpha) {
    s.alphas.clear();
    for (const std::string& part : split_commas(*overrides.alpha)) {
      if (part == "nn") {
        s.alphas.push_back(AlphaValue::nearest_neighbor());
      } else {
        s.alphas.push_back(AlphaValue::power_law(parse_number(part, "alpha")));
      }
    }
    if (s.alphas.empty()) throw ConfigError("--alpha list is empty");
  }
  if (overrides.delta) {
    s.deltas.clear();
    for (const std::string& part : split_commas(*overrides.delta)) {
      s.deltas.push_back(parse_number(part, "delta"));
    }
    if (s.deltas.empty()) throw ConfigError("--delta list is empty");
  }
  if (overrides.out) s.out = *overrides.out;
  if (overrides.workers) s.workers = *overrides.workers;

  if (s.n_sites < 2 || s.n_sites > kMaxSites) throw ConfigError("n out of range [2, 24]");
  for (const AlphaValue& a : s.alphas) {
    if (!a.nn_only && !(a.value > 0.0)) throw ConfigError("alpha values must be > 0");
  }
  if (!(s.solver.tolerance > 0.0) || s.solver.max_krylov_dim < 2) {
    throw ConfigError("solver: tolerance > 0 and max_krylov_dim >= 2 required");
  }
  if (s.propagator.krylov_dim < 4 || !(s.propagator.step_tolerance > 0.0)) {
    throw ConfigError("propagator: krylov_dim >= 4 and step_tolerance > 0 required");
  }
  if (s.workers < 1) throw ConfigError("workers must be >= 1");
  if (quench) {
    if (s.times.empty() || s.times.front() != 0.0) {
      throw ConfigError("times must start at 0");
    }
    for (std::size_t i = 1; i < s.times.size(); ++i) {
      if (!(s.times[i] > s.times[i - 1])) throw ConfigError("times must be strictly increasing");
    }
  }
  if (s.out.empty()) throw ConfigError("output path must not be empty");
  return s;
}

RunSettings load_run_settings(const std::string& command,
                              const std::optional<std::filesystem::path>& config_path,
                              const RunOverrides& overrides, int default_workers) {
  std::string text;
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) throw ConfigError("cannot read config file " + config_path->string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return resolve_run_settings(command, text, overrides, default_workers);
}

std::string manifest_json(const RunSettings& settings, double wall_seconds) {
  json alphas = json::array();
  for (const AlphaValue& a : settings.alphas) {
    if (a.nn_only) {
      alphas.push_back("nn");
    } else {
      alphas.push_back(a.value);
    }
  }
  json m{
      {"command", settings.command},
      {"version", kVersion},
      {"config",
       {{"n", settings.n_sites},
        {"regime", regime_name(settings.regime)},
        {"alpha", alphas},
        {"delta", settings.deltas},
        {"tolerance", settings.solver.tolerance},
        {"max_krylov_dim", settings.solver.max_krylov_dim},
        {"seed", settings.solver.seed},
        {"degeneracy_tol", settings.solver.degeneracy_tol},
        {"out", settings.out},
        {"workers", settings.workers}}},
      {"wall_time_seconds", wall_seconds},
  };
  if (settings.command == "quench") {
    m["config"]["times"] = settings.times;
    m["config"]["krylov_dim"] = settings.propagator.krylov_dim;
    m["config"]["step_tolerance"] = settings.propagator.step_tolerance;
    m["config"]["max_substeps"] = settings.propagator.max_substeps;
  }
  return m.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("short write to " + path.string());
}

}  // namespace ggm
