#include "oscillquad/levin.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <string>

#include "oscillquad/operators.hpp"
#include "oscillquad/reference.hpp"

namespace oscillquad {
namespace {

double binomial(int n, int k) {
  double b = 1.0;
  for (int t = 1; t <= k; ++t) b = b * (n - k + t) / t;
  return b;
}

int sign_index(int sign) { return sign > 0 ? 0 : 1; }

ComplexVector derivatives_at(const Polynomial& p, double x0, int order) {
  ComplexVector jet = p.taylor_coefficients(x0, order);
  double fact = 1.0;
  for (std::size_t k = 1; k < jet.size(); ++k) {
    fact *= static_cast<double>(k);
    jet[k] *= fact;
  }
  return jet;
}

ComplexVector column_of(const BandedMatrix& b, std::size_t n) {
  ComplexVector col(b.size(), Complex{0.0});
  for (std::size_t k = 0; k < b.size(); ++k) col[k] = b.get(k, n);
  return col;
}

// Middle-system right-hand side C^{-1} f~ with f~_m = (c_m^2 - 1) f_m.
ComplexVector weighted_coefficients(std::span<const Complex> f_samples,
                                    const ClenshawCurtisGrid& grid) {
  if (f_samples.size() != grid.size())
    throw std::invalid_argument("sample count does not match grid");
  ComplexVector scaled(grid.size(), Complex{0.0});
  for (std::size_t m = 1; m + 1 < grid.size(); ++m)
    scaled[m] = (grid[m] * grid[m] - 1.0) * f_samples[m];
  return apply_inverse_collocation_matrix(scaled, grid);
}

ComplexVector solve_middle(const BandedLU& lu, const ComplexVector& rhs) {
  const std::size_t nu = rhs.size() - 2;
  const ComplexVector inner(rhs.begin() + 1, rhs.begin() + 1 + static_cast<long>(nu));
  const ComplexVector x = lu.solve(inner);
  ComplexVector out(rhs.size(), Complex{0.0});
  std::copy(x.begin(), x.end(), out.begin() + 1);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string to_string(SolverPath path) {
  switch (path) {
    case SolverPath::scalar_s0: return "scalar_s0";
    case SolverPath::scalar_s: return "scalar_s";
    case SolverPath::block_s0: return "block_s0";
    case SolverPath::block_s: return "block_s";
    case SolverPath::dense_fallback: return "dense_fallback";
    case SolverPath::dense: return "dense";
  }
  return "unknown";
}

Polynomial collocation_row_weight() { return Polynomial{-1.0, 0.0, 1.0}; }

BandedMatrix levin_block_operator(const OscillatorSystem& sys, int i, int j, std::size_t n_rows) {
  const Polynomial rho = collocation_row_weight();
  const Polynomial p_diff = i == j ? rho * sys.r : Polynomial{};
  return build_banded_operator(p_diff, rho * sys.rg[j][i], n_rows);
}

LevinCollocation::LevinCollocation(const OscillatorSystem& sys, int nu, int s)
    : sys_(sys),
      m_(sys.m),
      nu_(nu),
      s_(s),
      grid_(clenshaw_curtis_points(nu)),
      perm_(static_cast<std::size_t>(std::max(sys.m, 1)), static_cast<std::size_t>(nu)) {
  if (s < 0) throw std::invalid_argument("LevinCollocation: s must be >= 0");
  const SystemDiagnostics diag = validate_system(sys);
  if (!diag.valid) throw std::invalid_argument("LevinCollocation: invalid system: " + diag.message);
  if (nu <= sys.d)
    throw UnsupportedRegimeError("LevinCollocation: need nu > d (nu = " + std::to_string(nu) +
                                 ", d = " + std::to_string(sys.d) + ")");

  const auto m = static_cast<std::size_t>(m_);
  const int half = std::max(sys.r.degree() + 1, diag.max_degree_rg + 2);
  const std::size_t n_rows = basis_size() + static_cast<std::size_t>(half) + 2;

  operators_.assign(m, {});
  folded_.assign(m, {});
  BlockArray middles(m);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      operators_[i].push_back(levin_block_operator(sys, i, j, n_rows));
      folded_[i].push_back(fold_operator(operators_[i][j], nu, sys.d));
      middles[i].push_back(folded_[i][j].principal_submatrix(1, static_cast<std::size_t>(nu)));
    }
  }
  middle_ = reorder_block_banded(middles, perm_);
  middle_lu_ = std::make_unique<BandedLU>(middle_);

  r_derivs_.resize(2);
  rg_derivs_.resize(2);
  cheb_table_.resize(2);
  for (const int sign : {1, -1}) {
    const int si = sign_index(sign);
    r_derivs_[si] = derivatives_at(sys.r, sign, s);
    rg_derivs_[si].assign(m, std::vector<ComplexVector>(m));
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < m; ++i) rg_derivs_[si][k][i] = derivatives_at(sys.rg[k][i], sign, s);
    cheb_table_[si] = cheb_endpoint_derivative_table(static_cast<int>(basis_size()) - 1, s + 1, sign);
  }

  null_.resize(2 * m);
  for (int k = 0; k < m_; ++k) {
    for (int t = 0; t < 2; ++t) {
      const std::size_t n = t == 0 ? 0 : head_size() - 1;
      std::vector<ComplexVector> rhs(m);
      for (std::size_t i = 0; i < m; ++i) {
        rhs[i] = column_of(folded_[i][k], n);
        for (auto& v : rhs[i]) v = -v;
      }
      auto v = interior_solve(rhs);
      v[k][n] = 1.0;
      null_[2 * k + t] = std::move(v);
    }
  }

  border_ = DenseMatrix(2 * m, 2 * m);
  for (int i = 0; i < m_; ++i)
    for (int si = 0; si < 2; ++si)
      for (std::size_t c = 0; c < 2 * m; ++c)
        border_(2 * i + si, c) = endpoint_functional(i, 0, si == 0 ? 1 : -1, null_[c]);
  border_lu_ = std::make_unique<DenseLU>(border_, DenseLU::Scaling::columns);
}

std::vector<ComplexVector> LevinCollocation::interior_solve(
    const std::vector<ComplexVector>& rhs) const {
  const auto m = static_cast<std::size_t>(m_);
  const auto nu = static_cast<std::size_t>(nu_);
  if (rhs.size() != m) throw std::invalid_argument("interior_solve: wrong component count");
  ComplexVector block_major(m * nu);
  for (std::size_t i = 0; i < m; ++i) {
    if (rhs[i].size() != head_size()) throw std::invalid_argument("interior_solve: wrong length");
    std::copy(rhs[i].begin() + 1, rhs[i].begin() + 1 + static_cast<long>(nu),
              block_major.begin() + static_cast<long>(i * nu));
  }
  const ComplexVector x = perm_.to_block_major(middle_lu_->solve(perm_.to_interleaved(block_major)));
  std::vector<ComplexVector> out(m, ComplexVector(head_size(), Complex{0.0}));
  for (std::size_t i = 0; i < m; ++i)
    std::copy(x.begin() + static_cast<long>(i * nu), x.begin() + static_cast<long>((i + 1) * nu),
              out[i].begin() + 1);
  return out;
}

Complex LevinCollocation::endpoint_functional(int i, int l, int sign,
                                              const std::vector<ComplexVector>& q) const {
  if (l < 0 || l > s_) throw std::invalid_argument("endpoint_functional: order out of range");
  const int si = sign_index(sign);
  const auto& table = cheb_table_[si];
  // sums[k][t] = q_k^{(t)}(sign)
  std::vector<ComplexVector> sums(static_cast<std::size_t>(m_),
                                  ComplexVector(static_cast<std::size_t>(l) + 2, Complex{0.0}));
  for (int k = 0; k < m_; ++k) {
    if (q[k].size() > basis_size()) throw std::invalid_argument("endpoint_functional: too long");
    for (int t = 0; t <= l + 1; ++t) {
      Complex acc{0.0};
      for (std::size_t n = 0; n < q[k].size(); ++n) acc += table[t][n] * q[k][n];
      sums[k][t] = acc;
    }
  }
  Complex value{0.0};
  for (int t = 0; t <= l; ++t) {
    Complex term = r_derivs_[si][l - t] * sums[i][t + 1];
    for (int k = 0; k < m_; ++k) term += rg_derivs_[si][k][i][l - t] * sums[k][t];
    value += binomial(l, t) * term;
  }
  return value;
}

Complex LevinCollocation::endpoint_coefficient(int i, int l, int sign, int k,
                                               std::size_t n) const {
  if (l < 0 || l > s_) throw std::invalid_argument("endpoint_coefficient: order out of range");
  const int si = sign_index(sign);
  const auto& table = cheb_table_[si];
  Complex value{0.0};
  for (int t = 0; t <= l; ++t) {
    Complex term = rg_derivs_[si][k][i][l - t] * table[t][n];
    if (i == k) term += r_derivs_[si][l - t] * table[t + 1][n];
    value += binomial(l, t) * term;
  }
  return value;
}

std::vector<ComplexVector> LevinCollocation::solve_head(const std::vector<ComplexVector>& interior,
                                                        const ComplexVector& endpoint_rhs) const {
  const auto m = static_cast<std::size_t>(m_);
  if (endpoint_rhs.size() != 2 * m) throw std::invalid_argument("solve_head: need 2M endpoint values");
  auto alpha = interior_solve(interior);
  ComplexVector rhs(2 * m);
  for (int i = 0; i < m_; ++i)
    for (int si = 0; si < 2; ++si)
      rhs[2 * i + si] = endpoint_rhs[2 * i + si] - endpoint_functional(i, 0, si == 0 ? 1 : -1, alpha);
  const ComplexVector delta = border_lu_->solve(rhs);
  for (std::size_t c = 0; c < 2 * m; ++c)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t n = 0; n < head_size(); ++n) alpha[k][n] += delta[c] * null_[c][k][n];
  return alpha;
}

std::vector<ComplexVector> LevinCollocation::solve(const AmplitudeSpec& f) const {
  const auto m = static_cast<std::size_t>(m_);
  if (f.size() != m) throw std::invalid_argument("solve: amplitude has wrong component count");
  if (s_ > 0 && f.derivative_order() < s_)
    throw std::invalid_argument("solve: endpoint derivatives of f up to order " +
                                std::to_string(s_) + " are required");

  std::vector<ComplexVector> interior(m);
  ComplexVector endpoint_rhs(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    ComplexVector samples(head_size(), Complex{0.0});
    for (std::size_t c = 1; c + 1 < head_size(); ++c)
      samples[c] = sys_.r(grid_[c]) * f.components[i](grid_[c]);
    interior[i] = weighted_coefficients(samples, grid_);
    endpoint_rhs[2 * i] = r_derivs_[0][0] * f.components[i](1.0);
    endpoint_rhs[2 * i + 1] = r_derivs_[1][0] * f.components[i](-1.0);
  }
  auto beta = solve_head(interior, endpoint_rhs);
  for (auto& b : beta) b.resize(basis_size(), Complex{0.0});
  if (s_ == 0) return beta;

  // Auxiliary solves for the 2s extra modes of each component.
  const std::size_t extra = 2 * static_cast<std::size_t>(s_);
  std::vector<std::vector<ComplexVector>> aux(m * extra);
  for (int k = 0; k < m_; ++k) {
    for (std::size_t j = 1; j <= extra; ++j) {
      const std::size_t n = head_size() - 1 + j;
      std::vector<ComplexVector> rhs(m);
      ComplexVector ends(2 * m);
      for (int i = 0; i < m_; ++i) {
        rhs[i] = folded_column(operators_[i][k], n, nu_);
        for (auto& v : rhs[i]) v = -v;
        ends[2 * i] = -endpoint_coefficient(i, 0, 1, k, n);
        ends[2 * i + 1] = -endpoint_coefficient(i, 0, -1, k, n);
      }
      aux[k * extra + (j - 1)] = solve_head(rhs, ends);
    }
  }

  // Derivative conditions (r L q)_i^{(l)}(+-1) = (r f_i)^{(l)}(+-1), l = 1..s.
  const std::size_t dim = m * extra;
  DenseMatrix kmat(dim, dim);
  ComplexVector rhs(dim);
  for (int i = 0; i < m_; ++i) {
    for (int si = 0; si < 2; ++si) {
      const int sign = si == 0 ? 1 : -1;
      const auto& fd = si == 0 ? f.derivs_plus[i] : f.derivs_minus[i];
      for (int l = 1; l <= s_; ++l) {
        const std::size_t row = i * extra + si * s_ + (l - 1);
        Complex target{0.0};
        for (int t = 0; t <= l; ++t) target += binomial(l, t) * r_derivs_[si][l - t] * fd[t];
        rhs[row] = target - endpoint_functional(i, l, sign, beta);
        for (int k = 0; k < m_; ++k)
          for (std::size_t j = 1; j <= extra; ++j) {
            const std::size_t col = k * extra + (j - 1);
            kmat(row, col) = endpoint_functional(i, l, sign, aux[col]) +
                             endpoint_coefficient(i, l, sign, k, head_size() - 1 + j);
          }
      }
    }
  }
  const ComplexVector tail = dense_solve(kmat, rhs, DenseLU::Scaling::columns);

  auto alpha = beta;
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t n = 0; n < head_size(); ++n) alpha[k][n] += tail[col] * aux[col][k][n];
    alpha[col / extra][head_size() + col % extra] = tail[col];
  }
  return alpha;
}

ChebCoeffVector solve_interior_scalar(const BandedMatrix& b_tilde,
                                      std::span<const Complex> f_samples,
                                      const ClenshawCurtisGrid& grid) {
  if (b_tilde.size() != grid.size())
    throw std::invalid_argument("solve_interior_scalar: matrix size does not match grid");
  const BandedLU lu(b_tilde.principal_submatrix(1, static_cast<std::size_t>(grid.nu)));
  return ChebCoeffVector{solve_middle(lu, weighted_coefficients(f_samples, grid))};
}

std::pair<ChebCoeffVector, ChebCoeffVector> null_vectors_scalar(const BandedMatrix& b_tilde,
                                                                const ClenshawCurtisGrid& grid) {
  if (b_tilde.size() != grid.size())
    throw std::invalid_argument("null_vectors_scalar: matrix size does not match grid");
  const BandedLU lu(b_tilde.principal_submatrix(1, static_cast<std::size_t>(grid.nu)));
  const std::size_t last = grid.size() - 1;
  const auto make = [&](std::size_t n) {
    ComplexVector rhs = column_of(b_tilde, n);
    for (auto& v : rhs) v = -v;
    ComplexVector v = solve_middle(lu, rhs);
    v[n] = 1.0;
    return ChebCoeffVector{std::move(v)};
  };
  return {make(0), make(last)};
}

Complex assemble_value(const OscillatorSystem& sys, const std::vector<ChebCoeffVector>& coeffs) {
  return boundary_value(sys, coeffs);
}

void attach_residual(const LevinProblem& problem, QuadratureResult& result) {
  const auto& sys = problem.sys;
  const ClenshawCurtisGrid grid = clenshaw_curtis_points(problem.nu);
  const auto m = static_cast<std::size_t>(sys.m);
  std::vector<ComplexVector> q_vals(m), dq_vals(m);
  for (std::size_t k = 0; k < m; ++k) {
    q_vals[k] = apply_collocation_matrix(fold_to_grid(result.coeffs[k].coeffs, problem.nu), grid);
    dq_vals[k] = apply_collocation_matrix(
        fold_to_grid(cheb_derivative(result.coeffs[k]).coeffs, problem.nu), grid);
  }
  double residual = 0.0, f_max = 0.0;
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const double x = grid[c];
    for (std::size_t i = 0; i < m; ++i) {
      const Complex fi = problem.f.components[i](x);
      f_max = std::max(f_max, std::abs(fi));
      if (c == 0 || c + 1 == grid.size()) continue;
      Complex lq = dq_vals[i][c];
      for (std::size_t j = 0; j < m; ++j)
        lq += sys.g_entry(static_cast<int>(j), static_cast<int>(i), x) * q_vals[j][c];
      residual = std::max(residual, std::abs(lq - fi));
    }
  }
  result.residual = residual;
  result.flagged = !(residual <= 1e-5 * sys.omega * f_max);
  result.accepted = residual <= 1e-8 * sys.omega * f_max;
}

QuadratureResult solve_fast(const LevinProblem& problem) {
  const auto start = std::chrono::steady_clock::now();
  const LevinCollocation solver(problem.sys, problem.nu, problem.s);
  const auto alpha = solver.solve(problem.f);
  QuadratureResult result;
  for (const auto& a : alpha) result.coeffs.push_back(ChebCoeffVector{a});
  result.value = assemble_value(problem.sys, result.coeffs);
  result.wall_time = seconds_since(start);
  result.nu = problem.nu;
  result.s = problem.s;
  const bool scalar = problem.sys.m == 1;
  result.path = problem.s == 0 ? (scalar ? SolverPath::scalar_s0 : SolverPath::block_s0)
                               : (scalar ? SolverPath::scalar_s : SolverPath::block_s);
  attach_residual(problem, result);
  return result;
}

namespace {

void require_tier(const LevinProblem& p, bool scalar, bool with_derivatives, const char* name) {
  if ((p.sys.m == 1) != scalar)
    throw std::invalid_argument(std::string(name) + (scalar ? ": requires M = 1" : ": requires M >= 2"));
  if ((p.s > 0) != with_derivatives)
    throw std::invalid_argument(std::string(name) + (with_derivatives ? ": requires s >= 1" : ": requires s = 0"));
}

}  // namespace

QuadratureResult solve_scalar_s0(const LevinProblem& problem) {
  require_tier(problem, true, false, "solve_scalar_s0");
  return solve_fast(problem);
}

QuadratureResult solve_scalar_s(const LevinProblem& problem) {
  require_tier(problem, true, true, "solve_scalar_s");
  return solve_fast(problem);
}

QuadratureResult solve_block_s0(const LevinProblem& problem) {
  require_tier(problem, false, false, "solve_block_s0");
  return solve_fast(problem);
}

QuadratureResult solve_block_s(const LevinProblem& problem) {
  require_tier(problem, false, true, "solve_block_s");
  return solve_fast(problem);
}

QuadratureResult quadrature(const LevinProblem& problem) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<QuadratureResult> best;
  const auto consider = [&best](QuadratureResult r) {
    const bool finite = std::isfinite(r.value.real()) && std::isfinite(r.value.imag());
    if (finite && (!best || r.residual < best->residual)) best = std::move(r);
  };
  const auto accepted = [&best] { return best && best->accepted; };
  const auto finish = [&best, start] {
    best->wall_time = seconds_since(start);
    return *best;
  };
  std::string failures;

  try {
    consider(solve_fast(problem));
  } catch (const SingularMatrixError& e) {
    failures += std::string(" fast: ") + e.what();
  } catch (const UnsupportedRegimeError& e) {
    failures += std::string(" fast: ") + e.what();
  }
  if (accepted()) return finish();

  // Unaccepted or failed fast solves escalate to dense LU, then to a
  // truncated-SVD solve; the smallest residual wins.
  try {
    QuadratureResult r = dense_levin_solve(problem);
    r.path = SolverPath::dense_fallback;
    consider(std::move(r));
  } catch (const UnsolvableProblemError& e) {
    failures += std::string(" dense: ") + e.what();
  } catch (const std::invalid_argument& e) {  // size guard
    failures += std::string(" dense: ") + e.what();
  }
  if (accepted()) return finish();
  try {
    consider(dense_levin_lstsq(problem));
  } catch (const std::exception& e) {
    failures += std::string(" lstsq: ") + e.what();
  }
  if (best) return finish();
  throw UnsolvableProblemError("no solver produced a finite value:" + failures);
}

}  // namespace oscillquad
