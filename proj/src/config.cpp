#include "oscillquad/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace oscillquad {
namespace {

using nlohmann::json;

Complex parse_complex(const json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigError(what + ": expected a number or a [re, im] pair");
}

ComplexVector parse_complex_list(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ConfigError(what + ": expected a nonempty array");
  ComplexVector out;
  for (const auto& v : j) out.push_back(parse_complex(v, what));
  return out;
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json poly_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(complex_to_json(c));
  return out;
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

double require_number(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number()) throw ConfigError(std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

OscillatorConfig oscillator_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  OscillatorConfig cfg;
  const json& type = require(j, "type");
  if (!type.is_string()) throw ConfigError("\"type\" must be a string");
  cfg.type = type.get<std::string>();
  cfg.omega = require_number(j, "omega");
  if (!(cfg.omega > 0.0) || !std::isfinite(cfg.omega)) throw ConfigError("\"omega\" must be positive");
  if (cfg.type == "exponential") {
    cfg.g = Polynomial(parse_complex_list(require(j, "g"), "g"));
  } else if (cfg.type == "bessel") {
    const double gamma = require_number(j, "gamma");
    if (gamma < 0 || std::floor(gamma) != gamma) throw ConfigError("\"gamma\" must be a nonnegative integer");
    cfg.gamma = static_cast<int>(gamma);
    cfg.a = require_number(j, "a");
  } else if (cfg.type == "custom") {
    cfg.r = Polynomial(parse_complex_list(require(j, "r"), "r"));
    const json& rg = require(j, "rG");
    if (!rg.is_array() || rg.empty()) throw ConfigError("rG: expected an M x M array");
    for (const auto& row : rg) {
      if (!row.is_array() || row.size() != rg.size()) throw ConfigError("rG: expected an M x M array");
      std::vector<Polynomial> prow;
      for (const auto& entry : row) prow.emplace_back(parse_complex_list(entry, "rG entry"));
      cfg.rg.push_back(std::move(prow));
    }
    cfg.w_plus = parse_complex_list(require(j, "w_plus"), "w_plus");
    cfg.w_minus = parse_complex_list(require(j, "w_minus"), "w_minus");
    if (cfg.w_plus.size() != rg.size() || cfg.w_minus.size() != rg.size())
      throw ConfigError("w_plus and w_minus need one entry per component");
  } else {
    throw ConfigError("unknown oscillator type \"" + cfg.type + "\"");
  }
  return cfg;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::vector<double> OmegaGrid::values() const {
  std::vector<double> out;
  if (points == 1) {
    out.push_back(std::pow(10.0, log10_from));
    return out;
  }
  for (int k = 0; k < points; ++k)
    out.push_back(std::pow(10.0, log10_from + (log10_to - log10_from) * k / (points - 1)));
  return out;
}

OscillatorConfig parse_oscillator_config(const std::string& json_text) {
  return oscillator_from_json(parse_text(json_text));
}

RunConfig parse_run_config(const std::string& json_text) {
  const json j = parse_text(json_text);
  RunConfig cfg;
  cfg.oscillator = oscillator_from_json(j);
  try {
    if (j.contains("amplitude")) cfg.amplitude = j.at("amplitude").get<std::string>();
    if (j.contains("nu")) cfg.nu = j.at("nu").get<int>();
    if (j.contains("s")) cfg.s = j.at("s").get<int>();
    if (j.contains("omega_grid")) {
      const json& g = j.at("omega_grid");
      OmegaGrid grid;
      grid.log10_from = g.at("log10_from").get<double>();
      grid.log10_to = g.at("log10_to").get<double>();
      grid.points = g.at("points").get<int>();
      cfg.omega_grid = grid;
    }
    if (j.contains("nu_grid")) cfg.nu_grid = j.at("nu_grid").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed run configuration: ") + e.what());
  }
  if (cfg.s < 0) throw ConfigError("\"s\" must be >= 0");
  if (cfg.omega_grid && cfg.omega_grid->points < 1) throw ConfigError("omega_grid is empty");
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config(buffer.str());
}

OscillatorSystem build_system(const OscillatorConfig& config, std::optional<double> omega) {
  const double w = omega.value_or(config.omega);
  try {
    if (config.type == "exponential") return make_exponential(config.g, w);
    if (config.type == "bessel") return make_bessel(config.gamma, config.a, w);
  } catch (const UnsupportedOscillatorError& e) {
    throw ConfigError(e.what());
  } catch (const PoleInIntervalError& e) {
    throw ConfigError(e.what());
  }
  if (config.type != "custom") throw ConfigError("unknown oscillator type \"" + config.type + "\"");
  OscillatorSystem sys;
  sys.m = static_cast<int>(config.rg.size());
  sys.omega = w;
  sys.r = config.r;
  sys.rg = config.rg;
  sys.w_plus = config.w_plus;
  sys.w_minus = config.w_minus;
  sys.d = cleared_degree(sys.r, sys.rg);
  const SystemDiagnostics diag = validate_system(sys);
  if (!diag.valid) throw ConfigError("invalid custom system: " + diag.message);
  return sys;
}

std::string serialize_system(const OscillatorSystem& sys) {
  json j;
  j["type"] = "custom";
  j["omega"] = sys.omega;
  j["r"] = poly_to_json(sys.r);
  json rg = json::array();
  for (const auto& row : sys.rg) {
    json jrow = json::array();
    for (const auto& p : row) jrow.push_back(poly_to_json(p));
    rg.push_back(jrow);
  }
  j["rG"] = rg;
  json wp = json::array(), wm = json::array();
  for (const auto& c : sys.w_plus) wp.push_back(complex_to_json(c));
  for (const auto& c : sys.w_minus) wm.push_back(complex_to_json(c));
  j["w_plus"] = wp;
  j["w_minus"] = wm;
  return j.dump();
}

}  // namespace oscillquad
