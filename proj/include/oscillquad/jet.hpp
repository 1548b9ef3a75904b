#pragma once

#include <span>

#include "oscillquad/types.hpp"

namespace oscillquad {

// Truncated Taylor series about a fixed point: jet[k] = f^{(k)}(x0) / k!.
// All operations keep the length of their first argument.

[[nodiscard]] inline ComplexVector jet_mul(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector out(a.size(), Complex{0.0});
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t t = 0; t <= k && t < b.size(); ++t) out[k] += b[t] * a[k - t];
  return out;
}

/// a / b; requires b[0] != 0.
[[nodiscard]] inline ComplexVector jet_div(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector out(a.size(), Complex{0.0});
  for (std::size_t k = 0; k < a.size(); ++k) {
    Complex acc = a[k];
    for (std::size_t t = 1; t <= k && t < b.size(); ++t) acc -= b[t] * out[k - t];
    out[k] = acc / b[0];
  }
  return out;
}

/// Derivative values f^{(k)}(x0) from a jet.
[[nodiscard]] inline ComplexVector jet_to_derivatives(std::span<const Complex> jet) {
  ComplexVector out(jet.begin(), jet.end());
  double fact = 1.0;
  for (std::size_t k = 1; k < out.size(); ++k) {
    fact *= static_cast<double>(k);
    out[k] *= fact;
  }
  return out;
}

[[nodiscard]] inline ComplexVector derivatives_to_jet(std::span<const Complex> derivs) {
  ComplexVector out(derivs.begin(), derivs.end());
  double fact = 1.0;
  for (std::size_t k = 1; k < out.size(); ++k) {
    fact *= static_cast<double>(k);
    out[k] /= fact;
  }
  return out;
}

}  // namespace oscillquad
