#pragma once

#include <functional>

#include "oscillquad/chebyshev.hpp"
#include "oscillquad/oscillator.hpp"

namespace oscillquad {

using ScalarFunction = std::function<Complex(double)>;

/// Amplitude vector f = (f_1, ..., f_M) with optional closed-form endpoint
/// derivatives. derivs_plus[i][l] = f_i^{(l)}(1) for l = 0..order, likewise
/// derivs_minus at -1; both are empty when no derivative data is available.
/// Component callables must be safe to invoke concurrently.
struct AmplitudeSpec {
  std::vector<ScalarFunction> components;
  std::vector<ComplexVector> derivs_plus;
  std::vector<ComplexVector> derivs_minus;

  [[nodiscard]] std::size_t size() const noexcept { return components.size(); }
  /// Highest derivative order available at both endpoints for every
  /// component; -1 when derivative data is missing.
  [[nodiscard]] int derivative_order() const noexcept;
  [[nodiscard]] ComplexVector operator()(double x) const;
};

/// f_1 = x / (x^2 + 0.02), remaining components zero.
[[nodiscard]] AmplitudeSpec amplitude_rational_runge(int m, int order);
/// f_1 = 1, remaining components zero.
[[nodiscard]] AmplitudeSpec amplitude_one(int m, int order);
/// f_1 = cos(x), remaining components zero.
[[nodiscard]] AmplitudeSpec amplitude_cos(int m, int order);
/// All components identically zero.
[[nodiscard]] AmplitudeSpec amplitude_zero(int m, int order);

/// f = L p with (L p)_i = p_i' + sum_j G_ji p_j, so the Levin solution is p
/// itself. `p` holds one Chebyshev series per component.
[[nodiscard]] AmplitudeSpec amplitude_manufactured(const OscillatorSystem& sys,
                                                   const std::vector<ChebCoeffVector>& p,
                                                   int order);

/// <p(1), w(1)> - <p(-1), w(-1)>: the exact quadrature value for a
/// manufactured amplitude.
[[nodiscard]] Complex boundary_value(const OscillatorSystem& sys,
                                     const std::vector<ChebCoeffVector>& p);

}  // namespace oscillquad
