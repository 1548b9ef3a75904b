#include "oscillquad/banded_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oscillquad {

BandedMatrix::BandedMatrix(std::size_t n, int lower_bw, int upper_bw)
    : n_(n), lower_(lower_bw), upper_(upper_bw) {
  if (lower_bw < 0 || upper_bw < 0) throw std::invalid_argument("BandedMatrix: negative bandwidth");
  data_.assign(static_cast<std::size_t>(lower_ + upper_ + 1) * n_, Complex{0.0});
}

BandedMatrix BandedMatrix::identity(std::size_t n) {
  BandedMatrix m(n, 0, 0);
  for (std::size_t i = 0; i < n; ++i) m.ref(i, i) = 1.0;
  return m;
}

void BandedMatrix::set(std::size_t i, std::size_t j, Complex v) {
  if (i >= n_ || j >= n_ || !in_band(i, j))
    throw std::out_of_range("BandedMatrix::set: (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside band");
  data_[index(i, j)] = v;
}

void BandedMatrix::add(std::size_t i, std::size_t j, Complex v) {
  if (i >= n_ || j >= n_ || !in_band(i, j))
    throw std::out_of_range("BandedMatrix::add: (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside band");
  data_[index(i, j)] += v;
}

ComplexVector BandedMatrix::multiply(std::span<const Complex> x) const {
  if (x.size() != n_) throw std::invalid_argument("BandedMatrix::multiply: size mismatch");
  ComplexVector y(n_, Complex{0.0});
  for (std::size_t j = 0; j < n_; ++j) {
    if (x[j] == Complex{0.0}) continue;
    const std::size_t lo = j > static_cast<std::size_t>(upper_) ? j - upper_ : 0;
    const std::size_t hi = std::min(n_ - 1, j + static_cast<std::size_t>(lower_));
    for (std::size_t i = lo; i <= hi; ++i) y[i] += data_[index(i, j)] * x[j];
  }
  return y;
}

DenseMatrix BandedMatrix::dense() const {
  DenseMatrix d(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (in_band(i, j)) d(i, j) = data_[index(i, j)];
  return d;
}

BandedMatrix BandedMatrix::principal_submatrix(std::size_t first, std::size_t count) const {
  if (first + count > n_) throw std::invalid_argument("principal_submatrix: range exceeds size");
  BandedMatrix sub(count, lower_, upper_);
  for (std::size_t j = 0; j < count; ++j) {
    const std::size_t lo = j > static_cast<std::size_t>(upper_) ? j - upper_ : 0;
    const std::size_t hi = std::min(count - 1, j + static_cast<std::size_t>(lower_));
    for (std::size_t i = lo; i <= hi; ++i) sub.ref(i, j) = ref(first + i, first + j);
  }
  return sub;
}

BandedMatrix BandedMatrix::widened(int lower, int upper) const {
  if (lower < lower_ || upper < upper_) throw std::invalid_argument("widened: band cannot shrink");
  BandedMatrix w(n_, lower, upper);
  for (std::size_t j = 0; j < n_; ++j) {
    const std::size_t lo = j > static_cast<std::size_t>(upper_) ? j - upper_ : 0;
    const std::size_t hi = std::min(n_ - 1, j + static_cast<std::size_t>(lower_));
    for (std::size_t i = lo; i <= hi; ++i) w.ref(i, j) = ref(i, j);
  }
  return w;
}

double BandedMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double BandedMatrix::norm1() const noexcept {
  double best = 0.0;
  for (std::size_t j = 0; j < n_; ++j) {
    const std::size_t lo = j > static_cast<std::size_t>(upper_) ? j - upper_ : 0;
    const std::size_t hi = std::min(n_ - 1, j + static_cast<std::size_t>(lower_));
    double s = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) s += std::abs(data_[index(i, j)]);
    best = std::max(best, s);
  }
  return best;
}

std::pair<int, int> BandedMatrix::occupied_bandwidths() const noexcept {
  int lower = 0, upper = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    const std::size_t lo = j > static_cast<std::size_t>(upper_) ? j - upper_ : 0;
    const std::size_t hi = std::min(n_ - 1, j + static_cast<std::size_t>(lower_));
    for (std::size_t i = lo; i <= hi; ++i) {
      if (data_[index(i, j)] == Complex{0.0}) continue;
      const int d = static_cast<int>(j) - static_cast<int>(i);
      if (d > 0) upper = std::max(upper, d);
      else lower = std::max(lower, -d);
    }
  }
  return {lower, upper};
}

}  // namespace oscillquad
