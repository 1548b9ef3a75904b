#include "oscillquad/chebyshev.hpp"

#include <cmath>
#include <numbers>

#include "oscillquad/dct.hpp"

namespace oscillquad {

Complex ChebCoeffVector::value_at_plus_one() const noexcept {
  Complex acc{0.0};
  for (const auto& c : coeffs) acc += c;
  return acc;
}

Complex ChebCoeffVector::value_at_minus_one() const noexcept {
  Complex acc{0.0};
  for (std::size_t n = 0; n < coeffs.size(); ++n) acc += (n % 2 == 0) ? coeffs[n] : -coeffs[n];
  return acc;
}

ClenshawCurtisGrid clenshaw_curtis_points(int nu) {
  if (nu < 2 || nu % 2 != 0)
    throw std::invalid_argument("nu must be even and >= 2, got " + std::to_string(nu));
  const int n = nu + 1;
  ClenshawCurtisGrid grid;
  grid.nu = nu;
  grid.points.resize(static_cast<std::size_t>(n) + 1);
  // cos(m pi / n) = sin((n - 2m) pi / (2n)); the sine form is accurate near +-1.
  for (int m = 0; 2 * m < n; ++m) {
    const double c = std::sin(std::numbers::pi * static_cast<double>(n - 2 * m) /
                              (2.0 * static_cast<double>(n)));
    grid.points[m] = c;
    grid.points[n - m] = -c;
  }
  return grid;
}

Complex cheb_eval(const ChebCoeffVector& series, double x) {
  if (std::abs(x) > 1.0 + 1e-12) throw std::domain_error("cheb_eval: |x| > 1");
  const auto& c = series.coeffs;
  if (c.empty()) return Complex{0.0};
  Complex b1{0.0}, b2{0.0};
  for (std::size_t k = c.size() - 1; k >= 1; --k) {
    const Complex b0 = 2.0 * x * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + c[0];
}

double cheb_endpoint_derivative(int n, int l, int sign) {
  if (n < 0 || l < 0) throw std::invalid_argument("cheb_endpoint_derivative: negative index");
  if (sign != 1 && sign != -1) throw std::invalid_argument("cheb_endpoint_derivative: sign must be +-1");
  if (l > n) return 0.0;
  double value = (sign < 0 && n % 2 != 0) ? -1.0 : 1.0;
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  for (int k = 1; k <= l; ++k) {
    const double km1 = static_cast<double>(k - 1);
    value *= static_cast<double>(sign) * (n2 - km1 * km1) / static_cast<double>(2 * k - 1);
  }
  return value;
}

std::vector<std::vector<double>> cheb_endpoint_derivative_table(int n_max, int max_order,
                                                                int sign) {
  std::vector<std::vector<double>> table(static_cast<std::size_t>(max_order) + 1,
                                         std::vector<double>(static_cast<std::size_t>(n_max) + 1));
  for (int n = 0; n <= n_max; ++n) {
    double value = (sign < 0 && n % 2 != 0) ? -1.0 : 1.0;
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    table[0][n] = value;
    for (int l = 1; l <= max_order; ++l) {
      const double lm1 = static_cast<double>(l - 1);
      value *= static_cast<double>(sign) * (n2 - lm1 * lm1) / static_cast<double>(2 * l - 1);
      table[l][n] = l > n ? 0.0 : value;
    }
  }
  return table;
}

ChebCoeffVector cheb_derivative(const ChebCoeffVector& series) {
  const auto& c = series.coeffs;
  const std::size_t n = c.size();
  if (n <= 1) return ChebCoeffVector{ComplexVector{Complex{0.0}}};
  // c'_{k-1} = c'_{k+1} + 2 k c_k, with the k - 1 = 0 term halved.
  ComplexVector d(n - 1, Complex{0.0});
  for (std::size_t k = n - 1; k >= 1; --k) {
    const Complex next = (k + 1 < n - 1) ? d[k + 1] : Complex{0.0};
    d[k - 1] = next + 2.0 * static_cast<double>(k) * c[k];
  }
  d[0] *= 0.5;
  return ChebCoeffVector{std::move(d)};
}

int grid_alias_index(long k, int nu) {
  const long period = 2L * (nu + 1);
  long r = k % period;
  if (r < 0) r += period;
  if (r > nu + 1) r = period - r;
  return static_cast<int>(r);
}

ComplexVector fold_to_grid(std::span<const Complex> coeffs, int nu) {
  ComplexVector out(static_cast<std::size_t>(nu) + 2, Complex{0.0});
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    out[grid_alias_index(static_cast<long>(k), nu)] += coeffs[k];
  return out;
}

ComplexVector apply_collocation_matrix(std::span<const Complex> alpha,
                                       const ClenshawCurtisGrid& grid) {
  if (alpha.size() != grid.size())
    throw std::invalid_argument("apply_collocation_matrix: length does not match grid");
  ComplexVector scaled(alpha.begin(), alpha.end());
  scaled.front() *= 2.0;
  scaled.back() *= 2.0;
  return dct1_forward(scaled);
}

ComplexVector apply_inverse_collocation_matrix(std::span<const Complex> values,
                                               const ClenshawCurtisGrid& grid) {
  if (values.size() != grid.size())
    throw std::invalid_argument("apply_inverse_collocation_matrix: length does not match grid");
  ComplexVector alpha = dct1_inverse(values);
  alpha.front() *= 0.5;
  alpha.back() *= 0.5;
  return alpha;
}

}  // namespace oscillquad
