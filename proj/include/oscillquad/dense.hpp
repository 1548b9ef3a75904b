#pragma once

#include <span>

#include "oscillquad/types.hpp"

namespace oscillquad {

/// Row-major dense complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0}) {}

  static DenseMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] ComplexVector multiply(std::span<const Complex> x) const;
  [[nodiscard]] double max_abs() const noexcept;
  [[nodiscard]] double norm1() const noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ComplexVector data_;
};

/// LU factorization with partial pivoting (LAPACK zgetrf). A pivot whose
/// magnitude falls below 1e-14 * max|A_ij| is reported as singular. With
/// Scaling::columns every column is first divided by its largest entry, so
/// the test applies to the equilibrated matrix.
class DenseLU {
 public:
  enum class Scaling { none, columns };

  explicit DenseLU(const DenseMatrix& a, Scaling scaling = Scaling::none);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] ComplexVector solve(std::span<const Complex> b) const;
  /// Solves A^H x = b.
  [[nodiscard]] ComplexVector solve_adjoint(std::span<const Complex> b) const;

 private:
  [[nodiscard]] ComplexVector solve_impl(std::span<const Complex> b, char trans) const;
  std::size_t n_;
  ComplexVector lu_;  // column-major
  std::vector<int> ipiv_;
  std::vector<double> col_scale_;  // empty when unscaled
};

/// Solves a small square system A x = b through DenseLU.
[[nodiscard]] ComplexVector dense_solve(const DenseMatrix& a, std::span<const Complex> b,
                                        DenseLU::Scaling scaling = DenseLU::Scaling::none);

/// Minimum-norm least-squares solution of A x = b (LAPACK zgelsd) after
/// equilibrating columns. Singular values below rcond * sigma_max are
/// treated as zero. `rank` receives the effective rank when non-null.
[[nodiscard]] ComplexVector dense_lstsq(const DenseMatrix& a, std::span<const Complex> b,
                                        double rcond, int* rank = nullptr);

}  // namespace oscillquad
