#pragma once

#include <span>

#include "oscillquad/types.hpp"

namespace oscillquad {

/// Clenshaw-Curtis collocation grid c_m = cos(m pi / (nu + 1)), m = 0..nu+1.
/// Points run from c_0 = 1 down to c_{nu+1} = -1.
struct ClenshawCurtisGrid {
  int nu = 0;
  std::vector<double> points;

  [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
  [[nodiscard]] double operator[](std::size_t m) const noexcept { return points[m]; }
};

/// Coefficients over the Chebyshev basis {T_0, T_1, ...}.
struct ChebCoeffVector {
  ComplexVector coeffs;

  [[nodiscard]] std::size_t size() const noexcept { return coeffs.size(); }
  /// Sum of coefficients, since T_n(1) = 1.
  [[nodiscard]] Complex value_at_plus_one() const noexcept;
  /// Alternating sum, since T_n(-1) = (-1)^n.
  [[nodiscard]] Complex value_at_minus_one() const noexcept;
};

/// Throws std::invalid_argument unless nu is even and at least 2. The two
/// halves of the grid are mirror images, so c_m + c_{nu+1-m} == 0 exactly.
[[nodiscard]] ClenshawCurtisGrid clenshaw_curtis_points(int nu);

/// Clenshaw recurrence for sum_n coeffs[n] T_n(x). Throws std::domain_error
/// when |x| > 1 + 1e-12.
[[nodiscard]] Complex cheb_eval(const ChebCoeffVector& series, double x);

/// [d^l/dx^l T_n](sign), sign = +1 or -1, via the multiplicative recursion
///   D^l T_n(+-1) = +-(n^2 - (l-1)^2) / (2l - 1) * D^{l-1} T_n(+-1),
/// seeded with T_n(+-1) = (+-1)^n. Vanishes for l > n.
[[nodiscard]] double cheb_endpoint_derivative(int n, int l, int sign);

/// Table E[l][n] = [d^l T_n / dx^l](sign) for l = 0..max_order, n = 0..n_max.
[[nodiscard]] std::vector<std::vector<double>> cheb_endpoint_derivative_table(int n_max,
                                                                              int max_order,
                                                                              int sign);

/// Chebyshev coefficients of the derivative of `series` (one shorter).
[[nodiscard]] ChebCoeffVector cheb_derivative(const ChebCoeffVector& series);

/// Index that T_k collapses to on the grid of parameter nu:
/// T_k(c_m) = T_{alias}(c_m) with alias in [0, nu + 1].
[[nodiscard]] int grid_alias_index(long k, int nu);

/// Folds a coefficient vector of any length onto the nu + 2 grid modes so that
/// both series take identical values at every grid point.
[[nodiscard]] ComplexVector fold_to_grid(std::span<const Complex> coeffs, int nu);

/// C * alpha with C_{mk} = T_k(c_m), evaluated through a DCT-I after doubling
/// the first and last coefficient.
[[nodiscard]] ComplexVector apply_collocation_matrix(std::span<const Complex> alpha,
                                                     const ClenshawCurtisGrid& grid);

/// C^{-1} * values: the grid interpolant's Chebyshev coefficients.
[[nodiscard]] ComplexVector apply_inverse_collocation_matrix(std::span<const Complex> values,
                                                             const ClenshawCurtisGrid& grid);

}  // namespace oscillquad
