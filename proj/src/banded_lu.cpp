#include "oscillquad/banded_lu.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oscillquad {

BandedLU::BandedLU(const BandedMatrix& a)
    : factors_(a.widened(a.lower_bw(), a.upper_bw() + a.lower_bw())),
      pivots_(a.size()),
      lower_(a.lower_bw()) {
  const std::size_t n = a.size();
  const auto kl = static_cast<std::size_t>(lower_);
  const auto ku = static_cast<std::size_t>(factors_.upper_bw());
  const double tol = 1e-14 * a.max_abs();
  auto& f = factors_;

  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t last_row = std::min(n - 1, k + kl);
    const std::size_t last_col = std::min(n - 1, k + ku);

    std::size_t p = k;
    double best = std::abs(f.ref(k, k));
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      const double v = std::abs(f.ref(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    pivots_[k] = p;
    if (best <= tol || !std::isfinite(best))
      throw SingularMatrixError("banded matrix is singular at pivot " + std::to_string(k), k);

    if (p != k)
      for (std::size_t j = k; j <= last_col; ++j) std::swap(f.ref(k, j), f.ref(p, j));

    const Complex inv_pivot = 1.0 / f.ref(k, k);
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      Complex& lik = f.ref(i, k);
      if (lik == Complex{0.0}) continue;
      lik *= inv_pivot;
      const Complex m = lik;
      for (std::size_t j = k + 1; j <= last_col; ++j) f.ref(i, j) -= m * f.ref(k, j);
    }
  }
}

ComplexVector BandedLU::solve(std::span<const Complex> b) const {
  const std::size_t n = size();
  if (b.size() != n) throw std::invalid_argument("BandedLU::solve: size mismatch");
  const auto kl = static_cast<std::size_t>(lower_);
  const auto ku = static_cast<std::size_t>(factors_.upper_bw());
  ComplexVector x(b.begin(), b.end());
  for (std::size_t k = 0; k < n; ++k) {
    if (pivots_[k] != k) std::swap(x[k], x[pivots_[k]]);
    const Complex xk = x[k];
    if (xk == Complex{0.0}) continue;
    const std::size_t last_row = std::min(n - 1, k + kl);
    for (std::size_t i = k + 1; i <= last_row; ++i) x[i] -= factors_.ref(i, k) * xk;
  }
  for (std::size_t kk = n; kk-- > 0;) {
    const std::size_t last_col = std::min(n - 1, kk + ku);
    Complex acc = x[kk];
    for (std::size_t j = kk + 1; j <= last_col; ++j) acc -= factors_.ref(kk, j) * x[j];
    x[kk] = acc / factors_.ref(kk, kk);
  }
  return x;
}

ComplexVector BandedLU::solve_adjoint(std::span<const Complex> b) const {
  const std::size_t n = size();
  if (b.size() != n) throw std::invalid_argument("BandedLU::solve_adjoint: size mismatch");
  const auto kl = static_cast<std::size_t>(lower_);
  const auto ku = static_cast<std::size_t>(factors_.upper_bw());
  ComplexVector x(b.begin(), b.end());
  // U^H is lower triangular.
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t first = j > ku ? j - ku : 0;
    Complex acc = x[j];
    for (std::size_t i = first; i < j; ++i) acc -= std::conj(factors_.ref(i, j)) * x[i];
    x[j] = acc / std::conj(factors_.ref(j, j));
  }
  // Then L_k^{-H} followed by P_k, for k = n-1 down to 0.
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t last_row = std::min(n - 1, k + kl);
    Complex acc = x[k];
    for (std::size_t i = k + 1; i <= last_row; ++i) acc -= std::conj(factors_.ref(i, k)) * x[i];
    x[k] = acc;
    if (pivots_[k] != k) std::swap(x[k], x[pivots_[k]]);
  }
  return x;
}

DenseMatrix BandedLU::reconstruct() const {
  const std::size_t n = size();
  const auto kl = static_cast<std::size_t>(lower_);
  DenseMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) r(i, j) = factors_.get(i, j);
  // Left-multiply U by L_k and then P_k, from k = n-1 down to 0.
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t last_row = std::min(n - 1, k + kl);
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      const Complex m = factors_.ref(i, k);
      if (m == Complex{0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += m * r(k, j);
    }
    if (pivots_[k] != k)
      for (std::size_t j = 0; j < n; ++j) std::swap(r(k, j), r(pivots_[k], j));
  }
  return r;
}

}  // namespace oscillquad
