#include "oscillquad/condition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace oscillquad {
namespace {

double norm1(const ComplexVector& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::abs(c);
  return s;
}

}  // namespace

double estimate_inverse_norm1(std::size_t n, const LinearSolve& solve,
                              const LinearSolve& solve_adjoint) {
  if (n == 0) return 0.0;
  const auto nd = static_cast<double>(n);
  ComplexVector x(n, Complex{1.0 / nd});
  double est = 0.0;
  std::size_t last_j = n;
  for (int iter = 0; iter < 5; ++iter) {
    const ComplexVector y = solve(x);
    const double y_norm = norm1(y);
    if (iter > 0 && y_norm <= est) break;
    est = y_norm;
    ComplexVector xi(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::abs(y[i]);
      xi[i] = a > 0.0 ? y[i] / a : Complex{1.0};
    }
    const ComplexVector z = solve_adjoint(xi);
    std::size_t j = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(z[i]) > std::abs(z[j])) j = i;
    Complex ztx{0.0};
    for (std::size_t i = 0; i < n; ++i) ztx += std::conj(z[i]) * x[i];
    if (std::abs(z[j]) <= ztx.real() || j == last_j) break;
    last_j = j;
    std::fill(x.begin(), x.end(), Complex{0.0});
    x[j] = 1.0;
  }
  // Higham's alternating test vector guards against the cases where the
  // power iteration stalls on a poor local maximum.
  ComplexVector alt(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = 1.0 + (n > 1 ? static_cast<double>(i) / (nd - 1.0) : 0.0);
    alt[i] = (i % 2 == 0) ? mag : -mag;
  }
  const double alt_est = 2.0 * norm1(solve(alt)) / (3.0 * nd);
  return std::max(est, alt_est);
}

double condition_estimate_1(const BandedMatrix& a) {
  std::unique_ptr<BandedLU> factored;
  try {
    factored = std::make_unique<BandedLU>(a);
  } catch (const SingularMatrixError&) {
    return std::numeric_limits<double>::infinity();
  }
  const BandedLU& lu = *factored;
  const double inv = estimate_inverse_norm1(
      a.size(), [&](std::span<const Complex> b) { return lu.solve(b); },
      [&](std::span<const Complex> b) { return lu.solve_adjoint(b); });
  return a.norm1() * inv;
}

double condition_estimate_1(const DenseMatrix& a) {
  // Column equilibration only affects the pivot test; solves still act on A.
  std::unique_ptr<DenseLU> factored;
  try {
    factored = std::make_unique<DenseLU>(a, DenseLU::Scaling::columns);
  } catch (const SingularMatrixError&) {
    return std::numeric_limits<double>::infinity();
  }
  const DenseLU& lu = *factored;
  const double inv = estimate_inverse_norm1(
      a.rows(), [&](std::span<const Complex> b) { return lu.solve(b); },
      [&](std::span<const Complex> b) { return lu.solve_adjoint(b); });
  return a.norm1() * inv;
}

}  // namespace oscillquad
