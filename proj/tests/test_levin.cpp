#include <doctest.h>

#include <cmath>

#include "oscillquad/amplitude.hpp"
#include "oscillquad/experiments.hpp"
#include "oscillquad/levin.hpp"
#include "oscillquad/operators.hpp"
#include "oscillquad/reference.hpp"
#include "support.hpp"

using namespace oscillquad;
using namespace testing_support;

namespace {

const Complex I{0.0, 1.0};

LevinProblem runge_problem(const OscillatorSystem& sys, int nu, int s) {
  return {sys, amplitude_rational_runge(sys.m, s), nu, s};
}

// sum_n alpha_n (T_n' + i omega T_n)(x) for the linear phase.
Complex apply_linear_phase(const ComplexVector& alpha, double omega, double x) {
  Complex s{0.0};
  for (std::size_t n = 0; n < alpha.size(); ++n)
    s += alpha[n] * (cheb_dt(static_cast<long>(n), x) + I * omega * cheb_t(static_cast<long>(n), x));
  return s;
}

Complex manual_value(const OscillatorSystem& sys, const std::vector<ChebCoeffVector>& q) {
  Complex v{0.0};
  for (int k = 0; k < sys.m; ++k) {
    Complex plus{0.0}, minus{0.0};
    for (std::size_t n = 0; n < q[k].size(); ++n) {
      plus += q[k].coeffs[n];
      minus += (n % 2 == 0 ? 1.0 : -1.0) * q[k].coeffs[n];
    }
    v += plus * sys.w_plus[k] - minus * sys.w_minus[k];
  }
  return v;
}

std::vector<ChebCoeffVector> unit_series(int m, int component, std::size_t n, std::size_t length) {
  std::vector<ChebCoeffVector> p(static_cast<std::size_t>(m), ChebCoeffVector{ComplexVector(length, 0.0)});
  p[static_cast<std::size_t>(component)].coeffs[n] = 1.0;
  return p;
}

double oracle_error_slope(const Polynomial& g, int s, const std::vector<double>& omegas) {
  std::vector<double> lw, le;
  for (double w : omegas) {
    const auto sys = make_exponential(g, w);
    const auto value = quadrature(runge_problem(sys, 4, s)).value;
    const auto ref = cc_oracle(levin_integrand(sys, amplitude_rational_runge(1, 0)), 1000000);
    lw.push_back(std::log10(w));
    le.push_back(std::log10(std::abs(value - ref)));
  }
  return fit_slope(lw, le);
}

}  // namespace

TEST_CASE("interior solve") {
  const double w = 100.0;
  const int nu = 16;
  const auto sys = make_exponential(Polynomial{0.0, 1.0}, w);
  const LevinCollocation solver(sys, nu, 0);
  const auto& grid = solver.grid();
  const auto& bt = solver.folded_block(0, 0);

  const auto zero = solve_interior_scalar(bt, ComplexVector(nu + 2, 0.0), grid);
  CHECK(max_abs(zero.coeffs) == 0.0);

  const auto alpha = solve_interior_scalar(bt, ComplexVector(nu + 2, 1.0), grid);
  REQUIRE(alpha.size() == static_cast<std::size_t>(nu + 2));
  CHECK(alpha.coeffs.front() == Complex{0.0});
  CHECK(alpha.coeffs.back() == Complex{0.0});
  for (std::size_t m = 1; m <= static_cast<std::size_t>(nu); ++m)
    CHECK(std::abs(apply_linear_phase(alpha.coeffs, w, grid[m]) - 1.0) <= 1e-9 * w);

  // Middle rows and columns of the uncleared system, solved densely.
  const auto a = dense_collocation_matrix(sys, nu, 0);
  std::vector<ComplexVector> mid(nu, ComplexVector(nu));
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j) mid[i][j] = a(i + 1, j + 1);
  const auto ref = naive_solve(mid, ComplexVector(nu, 1.0));
  for (int j = 0; j < nu; ++j)
    CHECK(std::abs(alpha.coeffs[j + 1] - ref[j]) <= 1e-10 * max_abs(ref));
}

TEST_CASE("null vectors span the kernel of the middle rows") {
  const double w = 100.0;
  const int nu = 32;
  const auto sys = make_exponential(Polynomial{0.0, 1.0}, w);
  const LevinCollocation solver(sys, nu, 0);
  const auto [v1, v2] = null_vectors_scalar(solver.folded_block(0, 0), solver.grid());
  CHECK(v1.coeffs.front() == Complex{1.0});
  CHECK(v1.coeffs.back() == Complex{0.0});
  CHECK(v2.coeffs.front() == Complex{0.0});
  CHECK(v2.coeffs.back() == Complex{1.0});
  const auto a = dense_collocation_matrix(sys, nu, 0);
  for (const auto* v : {&v1, &v2}) {
    const auto av = a.multiply(v->coeffs);
    for (int m = 1; m <= nu; ++m) CHECK(std::abs(av[m]) <= 1e-9 * w * max_abs(v->coeffs));
  }
  Complex g11{0.0}, g12{0.0}, g22{0.0};
  for (std::size_t n = 0; n < v1.size(); ++n) {
    g11 += std::conj(v1.coeffs[n]) * v1.coeffs[n];
    g12 += std::conj(v1.coeffs[n]) * v2.coeffs[n];
    g22 += std::conj(v2.coeffs[n]) * v2.coeffs[n];
  }
  CHECK(std::abs(g11 * g22 - g12 * std::conj(g12)) > 1e-8 * std::abs(g11 * g22));

  // The class's own null vectors agree with the free function.
  CHECK(max_abs_diff(solver.null_vector(0, 0)[0], v1.coeffs) < 1e-12 * max_abs(v1.coeffs));
  CHECK(max_abs_diff(solver.null_vector(0, 1)[0], v2.coeffs) < 1e-12 * max_abs(v2.coeffs));
}

TEST_CASE("scalar s = 0") {
  const double w = 100.0;
  const auto sys = make_exponential(Polynomial{0.0, 1.0}, w);

  SUBCASE("manufactured T_3") {
    const auto p = unit_series(1, 0, 3, 4);
    const LevinProblem problem{sys, amplitude_manufactured(sys, p, 0), 16, 0};
    const auto r = solve_scalar_s0(problem);
    const Complex expect = std::exp(I * w) + std::exp(-I * w);
    CHECK(std::abs(r.value - expect) <= 1e-10 * std::abs(expect));
    CHECK(r.path == SolverPath::scalar_s0);
  }
  SUBCASE("rational amplitude against the oracle") {
    const auto r = solve_scalar_s0(runge_problem(sys, 128, 0));
    const auto ref = cc_oracle(levin_integrand(sys, amplitude_rational_runge(1, 0)), 1000000);
    CHECK(std::abs(r.value - ref) <= 1e-8);
    CHECK(r.coeffs.size() == 1);
    CHECK(r.coeffs[0].size() == 130);
    CHECK(std::abs(manual_value(sys, r.coeffs) - r.value) <= 1e-13 * std::abs(r.value));
    CHECK(r.accepted);
    CHECK_FALSE(r.flagged);
    CHECK(r.residual <= 1e-8 * w * 50.0);
  }
  SUBCASE("zero amplitude") {
    CHECK(std::abs(solve_scalar_s0({sys, amplitude_zero(1, 0), 16, 0}).value) == 0.0);
  }
  SUBCASE("argument validation") {
    CHECK_THROWS_AS((void)solve_scalar_s0(runge_problem(sys, 15, 0)), std::invalid_argument);
    CHECK_THROWS_AS((void)solve_scalar_s0(runge_problem(sys, 16, 1)), std::invalid_argument);
    CHECK_THROWS_AS((void)solve_block_s0(runge_problem(sys, 16, 0)), std::invalid_argument);
    const auto cubic = make_exponential(Polynomial{0.0, 1.0, 0.0, 0.2}, w);
    CHECK_THROWS_AS((void)solve_scalar_s0(runge_problem(cubic, 2, 0)), UnsupportedRegimeError);
  }
}

TEST_CASE("scalar s >= 1") {
  const double w = 100.0;
  const auto sys = make_exponential(Polynomial{0.0, 1.0}, w);
  const int nu = 16;

  SUBCASE("manufactured beyond the s = 0 basis") {
    const auto p = unit_series(1, 0, nu + 2, nu + 4);
    const LevinProblem problem{sys, amplitude_manufactured(sys, p, 1), nu, 1};
    const auto r = solve_scalar_s(problem);
    const Complex expect = boundary_value(sys, p);
    CHECK(std::abs(r.value - expect) <= 1e-9 * std::abs(expect));
    CHECK(r.coeffs[0].size() == static_cast<std::size_t>(nu + 4));
    CHECK(r.path == SolverPath::scalar_s);
  }
  SUBCASE("zero amplitude with s = 2") {
    const auto r = solve_scalar_s({sys, amplitude_zero(1, 2), nu, 2});
    CHECK(std::abs(r.value) == 0.0);
    for (std::size_t n = nu + 2; n < r.coeffs[0].size(); ++n) CHECK(r.coeffs[0].coeffs[n] == Complex{0.0});
  }
  SUBCASE("missing derivative data") {
    CHECK_THROWS_AS((void)solve_scalar_s({sys, amplitude_rational_runge(1, 0), nu, 1}), std::invalid_argument);
  }
  SUBCASE("endpoint derivative conditions hold") {
    for (int s : {1, 2}) {
      const auto f = amplitude_rational_runge(1, s);
      const auto r = solve_scalar_s({sys, f, 32, s});
      // d^l/dx^l (q' + i w q) = q^{(l+1)} + i w q^{(l)}
      std::vector<ChebCoeffVector> derivs{r.coeffs[0]};
      for (int l = 0; l <= s; ++l) derivs.push_back(cheb_derivative(derivs.back()));
      for (int l = 1; l <= s; ++l)
        for (int sign : {1, -1}) {
          const double x = sign;
          const Complex lhs = cheb_eval(derivs[l + 1], x) + I * w * cheb_eval(derivs[l], x);
          const Complex rhs = (sign > 0 ? f.derivs_plus : f.derivs_minus)[0][l];
          CHECK(std::abs(lhs - rhs) <= 1e-7 * std::pow(w, s + 1) * (1.0 + std::abs(rhs)));
        }
    }
  }
}

TEST_CASE("block s = 0") {
  const double w = 100.0;

  SUBCASE("decoupled system equals two scalar solves") {
    OscillatorSystem sys;
    sys.m = 2;
    sys.omega = w;
    sys.r = Polynomial::constant(1.0);
    sys.rg = {{Polynomial::constant(I * w), Polynomial{}}, {Polynomial{}, Polynomial::constant(2.0 * I * w)}};
    sys.w_plus = {std::exp(I * w), std::exp(2.0 * I * w)};
    sys.w_minus = {std::exp(-I * w), std::exp(-2.0 * I * w)};
    sys.d = cleared_degree(sys.r, sys.rg);
    AmplitudeSpec f;
    f.components = {[](double x) { return Complex{x / (x * x + 0.02)}; },
                    [](double x) { return Complex{std::cos(x)}; }};
    const auto block = solve_block_s0({sys, f, 32, 0});
    CHECK(block.path == SolverPath::block_s0);
    const auto s1 = solve_scalar_s0({make_exponential(Polynomial{0.0, 1.0}, w), amplitude_rational_runge(1, 0), 32, 0});
    const auto s2 = solve_scalar_s0({make_exponential(Polynomial{0.0, 2.0}, w), amplitude_cos(1, 0), 32, 0});
    CHECK(std::abs(block.value - (s1.value + s2.value)) <= 1e-11 * std::abs(s1.value + s2.value));
  }
  SUBCASE("Bessel amplitude against the oracle") {
    const auto sys = make_bessel(1, 2.0, w);
    const auto r = solve_block_s0(runge_problem(sys, 128, 0));
    const auto ref = cc_oracle(levin_integrand(sys, amplitude_rational_runge(2, 0)), 1000000);
    CHECK(std::abs(r.value - ref) <= 1e-7);
    CHECK(std::abs(manual_value(sys, r.coeffs) - r.value) <= 1e-13 * std::abs(r.value));
    CHECK(r.accepted);
  }
  SUBCASE("zero amplitude") {
    CHECK(std::abs(solve_block_s0({make_bessel(1, 2.0, w), amplitude_zero(2, 0), 16, 0}).value) == 0.0);
  }
  SUBCASE("middle matrix respects the reordered bandwidth bound") {
    for (int gamma : {0, 1}) {
      const auto sys = make_bessel(gamma, 2.0, w);
      const LevinCollocation solver(sys, 32, 0);
      const auto [lo, up] = solver.middle_matrix().occupied_bandwidths();
      CHECK(lo + up + 1 <= 2 * sys.m * (sys.d + 4) - 1);
    }
  }
}

TEST_CASE("block s >= 1") {
  const double w = 100.0;
  const auto sys = make_bessel(1, 2.0, w);
  const int nu = 16;
  SUBCASE("manufactured in the first component") {
    const auto p = unit_series(2, 0, nu + 2, nu + 4);
    const auto r = solve_block_s({sys, amplitude_manufactured(sys, p, 1), nu, 1});
    const Complex expect = boundary_value(sys, p);
    CHECK(std::abs(r.value - expect) <= 1e-9 * std::abs(expect));
    CHECK(r.path == SolverPath::block_s);
  }
  SUBCASE("zero amplitude") {
    CHECK(std::abs(solve_block_s({sys, amplitude_zero(2, 1), nu, 1}).value) == 0.0);
  }
  SUBCASE("random manufactured solution in the extended basis, s = 2") {
    std::vector<ChebCoeffVector> p{ChebCoeffVector{random_vector(nu + 6)}, ChebCoeffVector{random_vector(nu + 6)}};
    const auto r = solve_block_s({sys, amplitude_manufactured(sys, p, 2), nu, 2});
    const Complex expect = boundary_value(sys, p);
    CHECK(std::abs(r.value - expect) <= 1e-9 * (1.0 + std::abs(expect)));
  }
}

TEST_CASE("fast and dense solvers agree") {
  for (double w : {50.0, 1000.0})
    for (int nu : {8, 32})
      for (int s : {0, 1}) {
        CAPTURE(w);
        CAPTURE(nu);
        CAPTURE(s);
        const auto scalar = make_exponential(Polynomial{0.0, 1.0}, w);
        const auto bessel = make_bessel(1, 2.0, w);
        for (const auto& problem : {runge_problem(scalar, nu, s), runge_problem(bessel, nu, s)}) {
          const auto fast = solve_fast(problem);
          const auto dense = dense_levin_solve(problem);
          CHECK(std::abs(fast.value - dense.value) <= 1e-8 * (1.0 + std::abs(dense.value)));
        }
      }
}

TEST_CASE("dispatcher paths") {
  const double w = 100.0;
  CHECK(quadrature(runge_problem(make_exponential(Polynomial{0.0, 1.0}, w), 16, 0)).path == SolverPath::scalar_s0);
  CHECK(quadrature(runge_problem(make_exponential(Polynomial{0.0, 1.0}, w), 16, 2)).path == SolverPath::scalar_s);
  CHECK(quadrature(runge_problem(make_bessel(1, 2.0, w), 16, 0)).path == SolverPath::block_s0);
  CHECK(quadrature(runge_problem(make_bessel(1, 2.0, w), 32, 3)).path == SolverPath::block_s);

  SUBCASE("nu <= d falls back") {
    const auto cubic = make_exponential(Polynomial{0.0, 1.0, 0.0, 0.2}, w);
    const auto r = quadrature(runge_problem(cubic, 2, 0));
    CHECK(r.path == SolverPath::dense_fallback);
    CHECK(std::isfinite(std::abs(r.value)));
  }
  SUBCASE("tiny omega falls back and stays accurate") {
    const auto sys = make_exponential(Polynomial{0.0, 1.0}, 0.001);
    const auto r = quadrature(runge_problem(sys, 64, 0));
    CHECK(r.path == SolverPath::dense_fallback);
    const auto ref = cc_oracle(levin_integrand(sys, amplitude_rational_runge(1, 0)), 100000);
    CHECK(std::abs(r.value - ref) <= 1e-6 * std::abs(ref));
  }
  SUBCASE("nu well above omega is rescued") {
    const auto sys = make_exponential(Polynomial{0.0, 1.0}, 10.0);
    const auto r = quadrature(runge_problem(sys, 128, 0));
    const auto ref = cc_oracle(levin_integrand(sys, amplitude_rational_runge(1, 0)), 200000);
    CHECK(std::abs(r.value - ref) <= 1e-9);
  }
}

TEST_CASE("error decays in omega, faster with endpoint derivatives") {
  const std::vector<double> omegas{1e2, std::pow(10.0, 2.5), 1e3, std::pow(10.0, 3.5), 1e4};
  const double s0 = oracle_error_slope(Polynomial{0.0, 1.0}, 0, omegas);
  MESSAGE("linear phase, s = 0: slope " << s0);
  CHECK(s0 <= -1.5);

  const Polynomial cubic{0.0, 1.0, 0.0, 0.1};
  const double c0 = oracle_error_slope(cubic, 0, omegas);
  const double c1 = oracle_error_slope(cubic, 1, omegas);
  MESSAGE("cubic phase slopes: s = 0 " << c0 << ", s = 1 " << c1);
  CHECK(c0 - c1 >= 0.7);
}

TEST_CASE("block error decays faster with endpoint derivatives") {
  const std::vector<double> omegas{1e2, std::pow(10.0, 2.5), 1e3, std::pow(10.0, 3.5), 1e4};
  std::vector<double> lw, e0, e1;
  for (double w : omegas) {
    const auto sys = make_bessel(1, 2.0, w);
    const auto ref = cc_oracle(levin_integrand(sys, amplitude_rational_runge(2, 0)), 1000000);
    lw.push_back(std::log10(w));
    e0.push_back(std::log10(std::abs(quadrature(runge_problem(sys, 4, 0)).value - ref)));
    e1.push_back(std::log10(std::abs(quadrature(runge_problem(sys, 4, 1)).value - ref)));
  }
  const double s0 = fit_slope(lw, e0), s1 = fit_slope(lw, e1);
  MESSAGE("Bessel slopes: s = 0 " << s0 << ", s = 1 " << s1);
  CHECK(s0 - s1 >= 0.5);
}
