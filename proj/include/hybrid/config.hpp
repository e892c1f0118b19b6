#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "hybrid/estimation.hpp"
#include "hybrid/pipeline.hpp"

namespace hybrid {

struct GridConfig {
  double f_min_Hz = 0;  // 0 means automatic
  double f_max_Hz = 0;
  int points = 2001;
};

struct McmcConfig {
  McmcSettings sampler;
  LikelihoodSpec likelihood;
  int bins = 120;
  int posterior_draws = 1000;
  std::vector<FreeParameter> free;
  std::vector<nlohmann::json> spectra;  // per-spectrum overrides of the base parameters
  std::vector<std::string> observed;    // CSV files (freq_Hz, S_SN); empty means synthetic
};

struct SimulateConfig {
  std::size_t samples = 1 << 16;
  int realizations = 1;
};

struct SweepConfig {
  std::string param = "detuning_Hz";
  std::vector<double> values;
};

struct CifarConfig {
  double f_min_Hz = 0;
  double f_max_Hz = 0;
  int points = 2001;
  std::vector<double> theta_deg{45, -45};
  int theta_sign = 1;
};

struct Config {
  SystemParams<double> params;
  std::optional<double> detuning_Hz;  // spin tuned against the shifted mechanics
  GridConfig grid;
  PipelineSettings pipeline;
  McmcConfig mcmc;
  SimulateConfig simulate;
  SweepConfig sweep;
  CifarConfig cifar;
  nlohmann::json raw;
  std::uint64_t params_hash = 0;

  /// Base parameters with one override; `detuning_Hz` retunes the spin.
  SystemParams<double> with(const std::string& name, double value) const;
  /// Applies a JSON object of overrides.
  SystemParams<double> with(const nlohmann::json& overrides) const;
};

Config parse_config(const nlohmann::json& j);
Config load_config(const std::string& path);

/// omega_S = -(shifted mechanical frequency + 2 pi detuning).
void tune_spin(SystemParams<double>& p, double detuning_Hz);

/// "# schema=1 params_hash=<hex>"
std::string csv_header(const Config& c);

std::uint64_t fnv1a64(const std::string& s);

}  // namespace hybrid
