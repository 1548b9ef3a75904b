#pragma once

// Independent oracles shared by the unit tests. Nothing here calls into the
// library's numerical kernels.

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "oscillquad/types.hpp"

namespace testing_support {

using oscillquad::Complex;
using oscillquad::ComplexVector;

inline constexpr double kPi = 3.14159265358979323846;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Complex random_complex() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

inline ComplexVector random_vector(std::size_t n) {
  ComplexVector v(n);
  for (auto& x : v) x = random_complex();
  return v;
}

/// T_n(x) = cos(n acos x) on [-1, 1].
inline double cheb_t(long n, double x) { return std::cos(static_cast<double>(n) * std::acos(x)); }

/// T_n'(x) = n sin(n t) / sin t with x = cos t, valid for |x| < 1.
inline double cheb_dt(long n, double x) {
  const double t = std::acos(x);
  return static_cast<double>(n) * std::sin(static_cast<double>(n) * t) / std::sin(t);
}

/// T_n^{(l)}(+-1) = (+-1)^{n+l} prod_{k<l} (n^2 - k^2) / (2k + 1).
inline double cheb_endpoint_closed_form(int n, int l, int sign) {
  double v = 1.0;
  for (int k = 0; k < l; ++k) v *= (static_cast<double>(n) * n - static_cast<double>(k) * k) / (2.0 * k + 1.0);
  return ((n + l) % 2 == 1 && sign < 0) ? -v : v;
}

inline double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const ComplexVector& a) {
  double m = 0.0;
  for (const auto& x : a) m = std::max(m, std::abs(x));
  return m;
}

/// Row-major dense Gaussian elimination with partial pivoting.
inline ComplexVector naive_solve(std::vector<ComplexVector> a, ComplexVector b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  ComplexVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

/// Composite Simpson rule on [-1, 1] with n (even) panels.
template <class F>
Complex simpson(F&& f, std::size_t n) {
  const double h = 2.0 / static_cast<double>(n);
  Complex s = f(-1.0) + f(1.0);
  for (std::size_t k = 1; k < n; ++k) s += (k % 2 == 1 ? 4.0 : 2.0) * f(-1.0 + h * static_cast<double>(k));
  return s * h / 3.0;
}

}  // namespace testing_support
