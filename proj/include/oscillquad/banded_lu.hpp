#pragma once

#include <span>

#include "oscillquad/banded_matrix.hpp"

namespace oscillquad {

/// Gaussian elimination with partial pivoting restricted to the band.
///
/// Factors are stored in a copy of A whose upper band is widened by lower_bw
/// to hold pivoting fill. Row interchanges are applied as they happen, so the
/// factorization reads A = P_0 L_0 P_1 L_1 ... P_{n-1} L_{n-1} U, where P_k
/// swaps rows k and pivots()[k] and L_k is unit lower triangular with its
/// multipliers in column k. A pivot with magnitude <= 1e-14 * max|A_ij|
/// raises SingularMatrixError carrying the elimination step.
class BandedLU {
 public:
  explicit BandedLU(const BandedMatrix& a);

  [[nodiscard]] std::size_t size() const noexcept { return factors_.size(); }
  [[nodiscard]] const BandedMatrix& factors() const noexcept { return factors_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  [[nodiscard]] int lower_bw() const noexcept { return lower_; }

  [[nodiscard]] ComplexVector solve(std::span<const Complex> b) const;
  /// Solves A^H x = b.
  [[nodiscard]] ComplexVector solve_adjoint(std::span<const Complex> b) const;

  /// Multiplies the stored factors back out; O(n^2) storage, for tests.
  [[nodiscard]] DenseMatrix reconstruct() const;

 private:
  BandedMatrix factors_;
  std::vector<std::size_t> pivots_;
  int lower_;
};

[[nodiscard]] inline BandedLU banded_lu_factor(const BandedMatrix& a) { return BandedLU(a); }

[[nodiscard]] inline ComplexVector banded_solve(const BandedLU& lu, std::span<const Complex> b) {
  return lu.solve(b);
}

}  // namespace oscillquad
