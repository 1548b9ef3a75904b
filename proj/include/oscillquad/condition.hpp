#pragma once

#include <functional>
#include <span>

#include "oscillquad/banded_lu.hpp"
#include "oscillquad/dense.hpp"

namespace oscillquad {

using LinearSolve = std::function<ComplexVector(std::span<const Complex>)>;

/// Lower bound on ||A^{-1}||_1 from Hager's method with Higham's refinements,
/// given solvers for A x = b and A^H x = b on vectors of length n.
[[nodiscard]] double estimate_inverse_norm1(std::size_t n, const LinearSolve& solve,
                                            const LinearSolve& solve_adjoint);

/// 1-norm condition estimate ||A||_1 * est(||A^{-1}||_1); infinity when the
/// factorization reports a singular pivot.
[[nodiscard]] double condition_estimate_1(const BandedMatrix& a);
[[nodiscard]] double condition_estimate_1(const DenseMatrix& a);

}  // namespace oscillquad
