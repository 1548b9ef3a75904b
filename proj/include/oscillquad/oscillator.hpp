#pragma once

#include <functional>
#include <optional>
#include <string>

#include "oscillquad/polynomial.hpp"

namespace oscillquad {

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

/// Weight system w' = G w on [-1, 1] in denominator-cleared form: r is a
/// polynomial without roots in [-1, 1] and every entry of rG = r(x) G(x) is a
/// polynomial.
struct OscillatorSystem {
  int m = 1;
  double omega = 0.0;
  Polynomial r = Polynomial::constant(1.0);
  PolynomialMatrix rg;
  ComplexVector w_plus;   ///< w(1)
  ComplexVector w_minus;  ///< w(-1)
  int d = 0;              ///< bandwidth parameter
  /// w(x) on the interior; only needed by the brute-force oracle.
  std::function<ComplexVector(double)> weight;

  /// G_{ij}(x) = rG_{ij}(x) / r(x).
  [[nodiscard]] Complex g_entry(int i, int j, double x) const { return rg[i][j](x) / r(x); }
};

/// w(x) = exp(i omega g(x)), so rG = (i omega g'). Throws
/// UnsupportedOscillatorError when g' has a zero on a 1000-point grid of
/// [-1, 1] or changes sign across it. d = deg g.
[[nodiscard]] OscillatorSystem make_exponential(const Polynomial& g, double omega);

/// Endpoint data for the Bessel system: J_gamma(omega (+-1 + a)) and the
/// derivative J_gamma' at the same arguments.
struct BesselEndpointValues {
  double j_plus = 0.0, dj_plus = 0.0;
  double j_minus = 0.0, dj_minus = 0.0;
};

/// w(x) = (J_gamma(omega (x + a)), J_gamma'(omega (x + a))) with r = (x + a)^2
/// and rG = [[0, omega r], [-omega r + gamma^2 / omega, -(x + a)]].
/// Throws PoleInIntervalError when |a| <= 1.
[[nodiscard]] OscillatorSystem make_bessel(double gamma, double a, double omega,
                                           const BesselEndpointValues& endpoints);

/// As above with the endpoint values (and the interior weight) computed by
/// bessel_eval. gamma must be a nonnegative integer.
[[nodiscard]] OscillatorSystem make_bessel(int gamma, double a, double omega);

/// d = max(deg r, max deg rG_ij).
[[nodiscard]] int cleared_degree(const Polynomial& r, const PolynomialMatrix& rg);

struct SystemDiagnostics {
  bool valid = false;
  int m = 0;
  int d = 0;
  int degree_r = 0;
  int max_degree_rg = 0;
  std::string message;
};

/// Structural checks plus a 1001-point sign test of r on [-1, 1].
[[nodiscard]] SystemDiagnostics validate_system(const OscillatorSystem& sys);

}  // namespace oscillquad
