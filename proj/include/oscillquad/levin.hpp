#pragma once

#include <memory>
#include <string>
#include <utility>

#include "oscillquad/amplitude.hpp"
#include "oscillquad/banded_lu.hpp"
#include "oscillquad/chebyshev.hpp"
#include "oscillquad/dense.hpp"
#include "oscillquad/hockney.hpp"
#include "oscillquad/oscillator.hpp"

namespace oscillquad {

struct LevinProblem {
  OscillatorSystem sys;
  AmplitudeSpec f;
  int nu = 16;
  int s = 0;
};

enum class SolverPath { scalar_s0, scalar_s, block_s0, block_s, dense_fallback, dense };

[[nodiscard]] std::string to_string(SolverPath path);

struct QuadratureResult {
  Complex value;
  /// One series per component, each of length nu + 2s + 2.
  std::vector<ChebCoeffVector> coeffs;
  /// max over interior grid points and components of |(L q)_i(c_m) - f_i(c_m)|.
  double residual = 0.0;
  /// residual > 1e-5 * omega * max|f| on the grid.
  bool flagged = false;
  /// residual <= 1e-8 * omega * max|f|; quadrature() escalates solves that miss it.
  bool accepted = true;
  SolverPath path = SolverPath::scalar_s0;
  double wall_time = 0.0;
  int nu = 0;
  int s = 0;
};

/// Collocation row weight rho(x) = x^2 - 1 applied to the interior equations.
[[nodiscard]] Polynomial collocation_row_weight();

/// Banded operator of block (i, j) of rho r L on {T_n}: rho r d/dx on the
/// diagonal plus rho (rG)_{ji}.
[[nodiscard]] BandedMatrix levin_block_operator(const OscillatorSystem& sys, int i, int j,
                                                std::size_t n_rows);

/// Precomputed state of the fast Levin-Clenshaw-Curtis solver for one
/// (system, nu, s): folded operator blocks, the Hockney-reordered middle
/// matrix and its banded LU, endpoint functionals, null vectors and the
/// 2M x 2M bordering factorization. Immutable after construction.
///
/// Coefficient vectors are stored per component; "head" vectors have length
/// nu + 2, full vectors nu + 2s + 2.
class LevinCollocation {
 public:
  /// Throws std::invalid_argument for odd nu or s < 0, UnsupportedRegimeError
  /// when nu <= d, SingularMatrixError when a fast-path system is singular.
  LevinCollocation(const OscillatorSystem& sys, int nu, int s);

  [[nodiscard]] int blocks() const noexcept { return m_; }
  [[nodiscard]] int nu() const noexcept { return nu_; }
  [[nodiscard]] int s() const noexcept { return s_; }
  [[nodiscard]] std::size_t head_size() const noexcept { return static_cast<std::size_t>(nu_) + 2; }
  [[nodiscard]] std::size_t basis_size() const noexcept {
    return static_cast<std::size_t>(nu_ + 2 * s_ + 2);
  }
  [[nodiscard]] const ClenshawCurtisGrid& grid() const noexcept { return grid_; }
  /// Folded (nu + 2) x (nu + 2) block B~^{[i,j]}.
  [[nodiscard]] const BandedMatrix& folded_block(int i, int j) const { return folded_[i][j]; }
  /// Reordered middle matrix D (M nu x M nu).
  [[nodiscard]] const BandedMatrix& middle_matrix() const noexcept { return middle_; }
  /// Rows (i, +-1) of the unscaled system applied to the null vectors.
  [[nodiscard]] const DenseMatrix& bordering_matrix() const noexcept { return border_; }

  /// Solves P B~ P alpha0 = P rhs for coefficient-space right-hand sides
  /// (nu + 2 entries per component, endpoints ignored). The result has zero
  /// first and last coefficient in every component.
  [[nodiscard]] std::vector<ComplexVector> interior_solve(
      const std::vector<ComplexVector>& rhs) const;

  /// v_{k,t} = e_{k,0} + v~ (t = 0) or e_{k,nu+1} + v~ (t = 1) spanning the
  /// kernel of the middle rows.
  [[nodiscard]] const std::vector<ComplexVector>& null_vector(int k, int t) const {
    return null_[2 * k + t];
  }

  /// [d^l/dx^l (r L q)_i](sign) for a coefficient vector of any length up to
  /// basis_size(); requires l <= s.
  [[nodiscard]] Complex endpoint_functional(int i, int l, int sign,
                                            const std::vector<ComplexVector>& q) const;
  /// Same functional applied to e_k T_n.
  [[nodiscard]] Complex endpoint_coefficient(int i, int l, int sign, int k, std::size_t n) const;

  /// Solves the nu + 2 point conditions per component: interior equations
  /// given in coefficient space, endpoint equations (r L q)_i(+-1) = b, with
  /// b ordered (0,+), (0,-), (1,+), ...
  [[nodiscard]] std::vector<ComplexVector> solve_head(const std::vector<ComplexVector>& interior,
                                                      const ComplexVector& endpoint_rhs) const;

  /// Full solve for amplitude f; returns nu + 2s + 2 coefficients per component.
  [[nodiscard]] std::vector<ComplexVector> solve(const AmplitudeSpec& f) const;

 private:
  OscillatorSystem sys_;
  int m_;
  int nu_;
  int s_;
  ClenshawCurtisGrid grid_;
  std::vector<std::vector<BandedMatrix>> operators_;  // unfolded blocks
  std::vector<std::vector<BandedMatrix>> folded_;
  BlockPermutation perm_;
  BandedMatrix middle_;
  std::unique_ptr<BandedLU> middle_lu_;
  // endpoint jets: [sign index][order] for r, [sign index][k][i][order] for rG_ki.
  std::vector<ComplexVector> r_derivs_;
  std::vector<std::vector<std::vector<ComplexVector>>> rg_derivs_;
  // [sign index][order][n]: T_n^{(order)}(sign), order = 0..s+1.
  std::vector<std::vector<std::vector<double>>> cheb_table_;
  std::vector<std::vector<ComplexVector>> null_;
  DenseMatrix border_;
  std::unique_ptr<DenseLU> border_lu_;
};

// ---- scalar building blocks on an explicit folded matrix ----

/// alpha0 solving P_nu B~ P_nu alpha0 = P_nu C^{-1} f~, with f~_m = (c_m^2 - 1) f_m.
[[nodiscard]] ChebCoeffVector solve_interior_scalar(const BandedMatrix& b_tilde,
                                                    std::span<const Complex> f_samples,
                                                    const ClenshawCurtisGrid& grid);

/// (v1, v2) = (e_0 + v~1, e_{nu+1} + v~2) with P_nu B~ v_j = 0.
[[nodiscard]] std::pair<ChebCoeffVector, ChebCoeffVector> null_vectors_scalar(
    const BandedMatrix& b_tilde, const ClenshawCurtisGrid& grid);

// ---- solver tiers ----

[[nodiscard]] QuadratureResult solve_scalar_s0(const LevinProblem& problem);
[[nodiscard]] QuadratureResult solve_scalar_s(const LevinProblem& problem);
[[nodiscard]] QuadratureResult solve_block_s0(const LevinProblem& problem);
[[nodiscard]] QuadratureResult solve_block_s(const LevinProblem& problem);

/// Fast path for any (M, s).
[[nodiscard]] QuadratureResult solve_fast(const LevinProblem& problem);

/// Dispatches on (M, s). A fast solve that throws (singular pivot, nu <= d)
/// or is not `accepted` is retried by dense LU and then by dense_levin_lstsq;
/// the finite candidate with the smallest residual is returned with path
/// dense_fallback. Throws UnsolvableProblemError when no candidate is finite.
[[nodiscard]] QuadratureResult quadrature(const LevinProblem& problem);

/// Boundary value sum_k q_k(1) w_k(1) - q_k(-1) w_k(-1).
[[nodiscard]] Complex assemble_value(const OscillatorSystem& sys,
                                     const std::vector<ChebCoeffVector>& coeffs);

/// Residual and flag for a computed solution, filled into `result`.
void attach_residual(const LevinProblem& problem, QuadratureResult& result);

}  // namespace oscillquad
