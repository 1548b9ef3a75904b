#pragma once

#include <optional>
#include <string>

#include "oscillquad/oscillator.hpp"

namespace oscillquad {

/// Malformed or inconsistent configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Oscillator description as read from JSON.
struct OscillatorConfig {
  std::string type;  ///< "exponential", "bessel" or "custom"
  double omega = 0.0;
  Polynomial g;                 ///< exponential
  int gamma = 0;                ///< bessel
  double a = 0.0;               ///< bessel
  Polynomial r = Polynomial::constant(1.0);  ///< custom
  PolynomialMatrix rg;          ///< custom
  ComplexVector w_plus;         ///< custom
  ComplexVector w_minus;        ///< custom
};

struct OmegaGrid {
  double log10_from = 1.0;
  double log10_to = 4.0;
  int points = 13;
  [[nodiscard]] std::vector<double> values() const;
};

struct RunConfig {
  OscillatorConfig oscillator;
  std::string amplitude = "rational_runge";
  int nu = 128;
  int s = 0;
  std::optional<OmegaGrid> omega_grid;
  std::vector<int> nu_grid;
};

/// Parses a JSON document; throws ConfigError.
[[nodiscard]] OscillatorConfig parse_oscillator_config(const std::string& json_text);
[[nodiscard]] RunConfig parse_run_config(const std::string& json_text);
[[nodiscard]] RunConfig load_run_config(const std::string& path);

/// Builds the system at the config's omega, or at `omega` when given.
[[nodiscard]] OscillatorSystem build_system(const OscillatorConfig& config,
                                            std::optional<double> omega = std::nullopt);

/// Custom-type JSON for any system; parse_oscillator_config followed by
/// build_system restores every polynomial coefficient bit for bit.
[[nodiscard]] std::string serialize_system(const OscillatorSystem& sys);

}  // namespace oscillquad
