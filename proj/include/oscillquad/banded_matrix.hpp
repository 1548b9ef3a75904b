#pragma once

#include <span>

#include "oscillquad/dense.hpp"
#include "oscillquad/types.hpp"

namespace oscillquad {

/// Square banded matrix stored by diagonals.
///
/// Entry (i, j) is stored iff -lower_bw <= j - i <= upper_bw; everything else
/// is structurally zero. Storage is diagonal-major: diagonal offset
/// (upper_bw + i - j) selects the row of a (lower_bw + upper_bw + 1) x n array,
/// and j the column.
class BandedMatrix {
 public:
  BandedMatrix() = default;
  BandedMatrix(std::size_t n, int lower_bw, int upper_bw);

  static BandedMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] int lower_bw() const noexcept { return lower_; }
  [[nodiscard]] int upper_bw() const noexcept { return upper_; }
  /// Number of stored diagonals, lower_bw + upper_bw + 1.
  [[nodiscard]] int bandwidth() const noexcept { return lower_ + upper_ + 1; }

  [[nodiscard]] bool in_band(std::size_t i, std::size_t j) const noexcept {
    const auto d = static_cast<long>(j) - static_cast<long>(i);
    return d <= upper_ && -d <= lower_;
  }
  [[nodiscard]] Complex get(std::size_t i, std::size_t j) const noexcept {
    return in_band(i, j) ? data_[index(i, j)] : Complex{0.0};
  }
  /// Throws std::out_of_range when (i, j) lies outside the band.
  void set(std::size_t i, std::size_t j, Complex v);
  void add(std::size_t i, std::size_t j, Complex v);

  /// Unchecked access for inner loops; (i, j) must be in band.
  Complex& ref(std::size_t i, std::size_t j) noexcept { return data_[index(i, j)]; }
  [[nodiscard]] const Complex& ref(std::size_t i, std::size_t j) const noexcept {
    return data_[index(i, j)];
  }

  [[nodiscard]] ComplexVector multiply(std::span<const Complex> x) const;
  [[nodiscard]] DenseMatrix dense() const;
  /// Principal submatrix of rows/columns [first, first + count).
  [[nodiscard]] BandedMatrix principal_submatrix(std::size_t first, std::size_t count) const;
  /// Same entries, band widened to (lower, upper); both must not shrink.
  [[nodiscard]] BandedMatrix widened(int lower, int upper) const;

  [[nodiscard]] double max_abs() const noexcept;
  [[nodiscard]] double norm1() const noexcept;
  /// Largest |i - j| below / above the diagonal carrying a nonzero entry.
  [[nodiscard]] std::pair<int, int> occupied_bandwidths() const noexcept;

 private:
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const noexcept {
    return static_cast<std::size_t>(upper_ + static_cast<long>(i) - static_cast<long>(j)) * n_ + j;
  }

  std::size_t n_ = 0;
  int lower_ = 0;
  int upper_ = 0;
  ComplexVector data_;
};

}  // namespace oscillquad
