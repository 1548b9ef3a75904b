#include "oscillquad/dense.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oscillquad {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexVector DenseMatrix::multiply(std::span<const Complex> x) const {
  if (x.size() != cols_) throw std::invalid_argument("DenseMatrix::multiply: size mismatch");
  ComplexVector y(rows_, Complex{0.0});
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc{0.0};
    const Complex* row = &data_[i * cols_];
    for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

double DenseMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double DenseMatrix::norm1() const noexcept {
  double best = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

DenseLU::DenseLU(const DenseMatrix& a, Scaling scaling) : n_(a.rows()) {
  if (a.rows() != a.cols()) throw std::invalid_argument("DenseLU: matrix must be square");
  if (n_ == 0) return;
  lu_.resize(n_ * n_);
  double max_abs = 0.0;
  if (scaling == Scaling::columns) {
    col_scale_.assign(n_, 1.0);
    for (std::size_t j = 0; j < n_; ++j) {
      double m = 0.0;
      for (std::size_t i = 0; i < n_; ++i) m = std::max(m, std::abs(a(i, j)));
      if (m > 0.0) col_scale_[j] = 1.0 / m;
    }
  }
  for (std::size_t j = 0; j < n_; ++j) {
    const double c = col_scale_.empty() ? 1.0 : col_scale_[j];
    for (std::size_t i = 0; i < n_; ++i) {
      lu_[j * n_ + i] = c * a(i, j);
      max_abs = std::max(max_abs, std::abs(lu_[j * n_ + i]));
    }
  }
  ipiv_.resize(n_);
  const auto n = static_cast<lapack_int>(n_);
  const lapack_int info =
      LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, reinterpret_cast<lapack_complex_double*>(lu_.data()),
                     n, ipiv_.data());
  if (info < 0) throw std::invalid_argument("DenseLU: zgetrf rejected its arguments");
  const double tol = 1e-14 * max_abs;
  for (std::size_t k = 0; k < n_; ++k) {
    if (std::abs(lu_[k * n_ + k]) <= tol)
      throw SingularMatrixError("dense matrix is singular at pivot " + std::to_string(k), k);
  }
}

ComplexVector DenseLU::solve_impl(std::span<const Complex> b, char trans) const {
  if (b.size() != n_) throw std::invalid_argument("DenseLU::solve: size mismatch");
  ComplexVector x(b.begin(), b.end());
  if (n_ == 0) return x;
  // With column scaling D the factored matrix is A D: A x = b becomes
  // (A D) y = b, x = D y, and A^H x = b becomes (A D)^H x = D b.
  const bool scaled = !col_scale_.empty();
  if (scaled && trans != 'N')
    for (std::size_t i = 0; i < n_; ++i) x[i] *= col_scale_[i];
  const auto n = static_cast<lapack_int>(n_);
  LAPACKE_zgetrs(LAPACK_COL_MAJOR, trans, n, 1,
                 reinterpret_cast<const lapack_complex_double*>(lu_.data()), n, ipiv_.data(),
                 reinterpret_cast<lapack_complex_double*>(x.data()), n);
  if (scaled && trans == 'N')
    for (std::size_t i = 0; i < n_; ++i) x[i] *= col_scale_[i];
  return x;
}

ComplexVector DenseLU::solve(std::span<const Complex> b) const { return solve_impl(b, 'N'); }

ComplexVector DenseLU::solve_adjoint(std::span<const Complex> b) const {
  return solve_impl(b, 'C');
}

ComplexVector dense_solve(const DenseMatrix& a, std::span<const Complex> b,
                          DenseLU::Scaling scaling) {
  return DenseLU(a, scaling).solve(b);
}

ComplexVector dense_lstsq(const DenseMatrix& a, std::span<const Complex> b, double rcond,
                          int* rank) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw std::invalid_argument("dense_lstsq: size mismatch");
  if (n == 0) return {};
  const std::size_t ld = std::max(m, n);
  std::vector<double> scale(n, 1.0);
  ComplexVector cm(m * n);
  for (std::size_t j = 0; j < n; ++j) {
    double c = 0.0;
    for (std::size_t i = 0; i < m; ++i) c = std::max(c, std::abs(a(i, j)));
    if (c > 0.0) scale[j] = 1.0 / c;
    for (std::size_t i = 0; i < m; ++i) cm[j * m + i] = scale[j] * a(i, j);
  }
  ComplexVector x(ld, Complex{0.0});
  std::copy(b.begin(), b.end(), x.begin());
  std::vector<double> sv(std::min(m, n));
  lapack_int r = 0;
  const lapack_int info = LAPACKE_zgelsd(
      LAPACK_COL_MAJOR, static_cast<lapack_int>(m), static_cast<lapack_int>(n), 1,
      reinterpret_cast<lapack_complex_double*>(cm.data()), static_cast<lapack_int>(m),
      reinterpret_cast<lapack_complex_double*>(x.data()), static_cast<lapack_int>(ld), sv.data(),
      rcond, &r);
  if (info < 0) throw std::invalid_argument("dense_lstsq: zgelsd rejected its arguments");
  if (info > 0) throw std::runtime_error("dense_lstsq: SVD failed to converge");
  if (rank != nullptr) *rank = static_cast<int>(r);
  x.resize(n);
  for (std::size_t j = 0; j < n; ++j) x[j] *= scale[j];
  return x;
}

}  // namespace oscillquad
