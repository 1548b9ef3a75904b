#pragma once

#include <functional>

#include "oscillquad/dense.hpp"
#include "oscillquad/levin.hpp"

namespace oscillquad {

/// Largest dense system dense_levin_solve accepts.
inline constexpr std::size_t kDenseSizeLimit = 20000;

/// Full collocation matrix of the Levin system in its original, uncleared
/// form. For component i the rows are the nu + 2 point conditions
/// (L q)_i(c_m) followed by s derivative conditions at +1 and s at -1;
/// columns run over e_k T_n, n = 0..nu + 2s + 1, component-major.
[[nodiscard]] DenseMatrix dense_collocation_matrix(const OscillatorSystem& sys, int nu, int s);

/// Right-hand side matching dense_collocation_matrix.
[[nodiscard]] ComplexVector dense_collocation_rhs(const LevinProblem& problem);

/// Solves the dense collocation system by LU with partial pivoting. Throws
/// std::invalid_argument past kDenseSizeLimit unknowns and
/// UnsolvableProblemError when the system is singular.
[[nodiscard]] QuadratureResult dense_levin_solve(const LevinProblem& problem);

/// Truncated-SVD minimum-norm solve of the same system. Directions with
/// relative singular value below 1e-12 are dropped; near nu > omega these
/// are approximate homogeneous solutions, which leave the boundary value
/// unchanged. Path is dense_fallback.
[[nodiscard]] QuadratureResult dense_levin_lstsq(const LevinProblem& problem);

using Integrand = std::function<Complex(double)>;

/// Clenshaw-Curtis quadrature of `integrand` over [-1, 1] on n_points + 1
/// nodes, weights from a DCT-I. n_points must be even and >= 8.
[[nodiscard]] Complex cc_oracle(const Integrand& integrand, std::size_t n_points);

/// Clenshaw-Curtis weights for n_points + 1 nodes cos(k pi / n_points).
[[nodiscard]] std::vector<double> clenshaw_curtis_weights(std::size_t n_points);

/// x -> sum_i f_i(x) w_i(x). Throws std::invalid_argument when the system
/// carries no interior weight.
[[nodiscard]] Integrand levin_integrand(const OscillatorSystem& sys, const AmplitudeSpec& f);

}  // namespace oscillquad
