#pragma once

#include "oscillquad/banded_matrix.hpp"
#include "oscillquad/polynomial.hpp"

namespace oscillquad {

// Operators act on Chebyshev coefficient vectors: column n of a matrix holds
// the expansion of (operator applied to T_n) in {T_k}. All of them use the
// T_{-n} = T_n convention at the low end of the basis.

/// Multiplication by x: x T_n = (T_{n-1} + T_{n+1}) / 2, x T_0 = T_1.
[[nodiscard]] BandedMatrix op_mult_x(std::size_t n_rows);

/// (1 - x^2) d/dx: (1 - x^2) T_n' = n/2 T_{n-1} - n/2 T_{n+1}.
[[nodiscard]] BandedMatrix op_weighted_diff(std::size_t n_rows);

/// Banded representation of p_diff(x) d/dx + p_mult(x) on {T_n}.
///
/// p_diff must be a multiple of (1 - x^2) (or zero): writing
/// p_diff = (1 - x^2) q, the matrix is q(X) Dw + p_mult(X) with X = op_mult_x
/// and Dw = op_weighted_diff, both polynomials expanded by Horner's rule.
/// Entries agree with the infinite operator matrix on every stored position;
/// nothing is lost to truncation. Half-bandwidth is
/// max(deg q + 1, deg p_mult).
[[nodiscard]] BandedMatrix build_banded_operator(const Polynomial& p_diff,
                                                 const Polynomial& p_mult,
                                                 std::size_t n_rows);

/// Folds an operator matrix onto the nu + 2 Chebyshev modes resolved by the
/// Clenshaw-Curtis grid of parameter nu, using T_{nu+1+l}(c_m) = T_{nu+1-l}(c_m).
///
/// Requires nu > d (else UnsupportedRegimeError) and enough rows in B to hold
/// every entry of columns 0..nu+1.
[[nodiscard]] BandedMatrix fold_operator(const BandedMatrix& b, int nu, int d);

/// Column n of B folded onto the grid modes; n may exceed nu + 1.
[[nodiscard]] ComplexVector folded_column(const BandedMatrix& b, std::size_t n, int nu);

}  // namespace oscillquad
