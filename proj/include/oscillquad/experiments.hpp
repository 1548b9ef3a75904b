#pragma once

#include <iosfwd>
#include <string>

#include "oscillquad/config.hpp"
#include "oscillquad/levin.hpp"

namespace oscillquad {

enum class Method { fast, dense, oracle };

/// "fast", "dense" or "oracle"; throws ConfigError otherwise.
[[nodiscard]] Method parse_method(const std::string& name);
[[nodiscard]] std::string to_string(Method method);

/// Oracle node count: OSCILLQUAD_ORACLE_POINTS if set, else 1000000.
[[nodiscard]] std::size_t oracle_points();

/// Registry: "rational_runge", "one", "cos", "manufactured:<n>" (f = L(e_1 T_n)).
/// Derivative data is provided up to `order`. Throws ConfigError for unknown names.
[[nodiscard]] AmplitudeSpec make_named_amplitude(const std::string& name,
                                                 const OscillatorSystem& sys, int order);

/// Exact value for manufactured amplitudes, nullopt for the others.
[[nodiscard]] std::optional<Complex> closed_form_value(const std::string& name,
                                                       const OscillatorSystem& sys);

[[nodiscard]] Complex oracle_value(const OscillatorSystem& sys, const AmplitudeSpec& f);

struct QuadRow {
  Method method = Method::fast;
  double omega = 0.0;
  int nu = 0;
  int s = 0;
  Complex value;
  double residual = 0.0;
  double wall_seconds = 0.0;
};

struct OmegaSweepRow {
  double omega = 0.0;
  int nu = 0;
  double abs_error = 0.0;
};

struct NuSweepRow {
  int nu = 0;
  double abs_error = 0.0;
  double wall_seconds_fast = 0.0;
  double wall_seconds_dense = 0.0;  ///< NaN when the dense system is too large
};

struct BenchRow {
  int nu = 0;
  Method method = Method::fast;
  double wall_seconds = 0.0;
};

struct ConditionRow {
  int nu = 0;
  double cond_full = 0.0;
  double cond_banded = 0.0;
  double cond_border = 0.0;
};

[[nodiscard]] QuadRow run_quad(const RunConfig& cfg, Method method);

/// One row per (nu, omega); nu from cfg.nu_grid when nonempty, else cfg.nu.
/// Each error is measured against a fresh oracle at that omega.
[[nodiscard]] std::vector<OmegaSweepRow> sweep_omega(const RunConfig& cfg, Method method,
                                                     int parallel = 1);

[[nodiscard]] std::vector<NuSweepRow> sweep_nu(const RunConfig& cfg, int parallel = 1);

/// Median of `repeats` wall times per (nu, method); always sequential.
[[nodiscard]] std::vector<BenchRow> bench(const RunConfig& cfg, const std::vector<Method>& methods,
                                          int repeats);

/// 1-norm condition estimates of the full dense system, the reordered middle
/// banded matrix and the 2M x 2M bordering matrix.
[[nodiscard]] ConditionRow condition_row(const OscillatorSystem& sys, int nu);
[[nodiscard]] std::vector<ConditionRow> condition_study(const RunConfig& cfg, int parallel = 1);

void write_csv(std::ostream& out, const std::vector<QuadRow>& rows);
void write_csv(std::ostream& out, const std::vector<OmegaSweepRow>& rows);
void write_csv(std::ostream& out, const std::vector<NuSweepRow>& rows);
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);
void write_csv(std::ostream& out, const std::vector<ConditionRow>& rows);

/// %.17g formatting.
[[nodiscard]] std::string format_number(double v);

/// Least-squares slope of y against x.
[[nodiscard]] double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace oscillquad
