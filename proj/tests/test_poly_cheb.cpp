#include <doctest.h>

#include <cmath>

#include "oscillquad/chebyshev.hpp"
#include "oscillquad/dct.hpp"
#include "oscillquad/operators.hpp"
#include "oscillquad/polynomial.hpp"
#include "support.hpp"

using namespace oscillquad;
using namespace testing_support;

namespace {

const Complex I{0.0, 1.0};

// sum_k column_n[k] T_k(x)
Complex eval_column(const BandedMatrix& b, std::size_t n, double x) {
  Complex s{0.0};
  for (std::size_t k = 0; k < b.size(); ++k) s += b.get(k, n) * cheb_t(static_cast<long>(k), x);
  return s;
}

Polynomial random_polynomial(int degree) {
  ComplexVector c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = random_complex();
  return Polynomial(c);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial p{1.0, 2.0, 3.0};
  const Polynomial q{-1.0, 1.0};
  CHECK((p * q) == Polynomial({-1.0, -1.0, -1.0, 3.0}));
  CHECK((p + q) == Polynomial({0.0, 3.0, 3.0}));
  CHECK((p - p).is_zero());
  CHECK(p.derivative() == Polynomial({2.0, 6.0}));
  CHECK(std::abs(p(2.0) - Complex{17.0}) == 0.0);
  CHECK(Polynomial({1.0, 0.0, 0.0}).degree() == 0);

  const auto [quot, rem] = (p * Polynomial::one_minus_x_squared()).divide(Polynomial::one_minus_x_squared());
  CHECK(quot == p);
  CHECK(rem.is_zero());
  CHECK_THROWS_AS((void)p.divide(Polynomial{}), std::invalid_argument);

  // p(x) = 1 + 2x + 3x^2 about x0 = 1: 6 + 8 (x-1) + 3 (x-1)^2
  const auto t = p.taylor_coefficients(1.0, 3);
  CHECK(std::abs(t[0] - 6.0) < 1e-15);
  CHECK(std::abs(t[1] - 8.0) < 1e-15);
  CHECK(std::abs(t[2] - 3.0) < 1e-15);
  CHECK(std::abs(t[3]) < 1e-15);
}

TEST_CASE("grid matches direct cosine evaluation") {
  const auto grid = clenshaw_curtis_points(64);
  REQUIRE(grid.size() == 66);
  for (std::size_t m = 0; m < grid.size(); ++m)
    CHECK(std::abs(grid[m] - std::cos(static_cast<double>(m) * kPi / 65.0)) <= 1e-15);
  CHECK(grid[0] == 1.0);
  CHECK(grid[65] == -1.0);
}

TEST_CASE("grid is exactly antisymmetric for every even nu up to 4096") {
  bool ok = true;
  for (int nu = 2; nu <= 4096; nu += 2) {
    const auto grid = clenshaw_curtis_points(nu);
    for (std::size_t m = 0; m < grid.size(); ++m)
      ok = ok && (grid[m] + grid[grid.size() - 1 - m] == 0.0);
  }
  CHECK(ok);
}

TEST_CASE("odd or tiny nu is rejected") {
  CHECK_THROWS_AS((void)clenshaw_curtis_points(7), std::invalid_argument);
  CHECK_THROWS_AS((void)clenshaw_curtis_points(0), std::invalid_argument);
}

TEST_CASE("cheb_eval") {
  ChebCoeffVector e5{ComplexVector(6, 0.0)};
  e5.coeffs[5] = 1.0;
  CHECK(std::abs(cheb_eval(e5, 1.0) - 1.0) < 1e-15);
  CHECK(std::abs(cheb_eval(ChebCoeffVector{{0.0, 1.0}}, 0.3) - 0.3) < 1e-15);
  CHECK(std::abs(cheb_eval(ChebCoeffVector{{0.0, 0.0, 1.0}}, 0.5) + 0.5) < 1e-15);
  CHECK_THROWS_AS((void)cheb_eval(e5, 1.1), std::domain_error);

  const ChebCoeffVector r{random_vector(20)};
  for (double x : {-1.0, -0.4, 0.0, 0.77, 1.0}) {
    Complex direct{0.0};
    for (long n = 0; n < 20; ++n) direct += r.coeffs[static_cast<std::size_t>(n)] * cheb_t(n, x);
    CHECK(std::abs(cheb_eval(r, x) - direct) < 1e-13);
  }
  CHECK(std::abs(r.value_at_plus_one() - cheb_eval(r, 1.0)) < 1e-13);
  CHECK(std::abs(r.value_at_minus_one() - cheb_eval(r, -1.0)) < 1e-13);
}

TEST_CASE("cheb_derivative matches the trigonometric derivative formula") {
  const ChebCoeffVector r{random_vector(15)};
  const auto d = cheb_derivative(r);
  CHECK(d.size() == 14);
  for (double x : {-0.9, -0.2, 0.35, 0.8}) {
    Complex direct{0.0};
    for (long n = 0; n < 15; ++n) direct += r.coeffs[static_cast<std::size_t>(n)] * cheb_dt(n, x);
    CHECK(std::abs(cheb_eval(d, x) - direct) < 1e-12);
  }
}

TEST_CASE("endpoint derivatives") {
  CHECK(cheb_endpoint_derivative(5, 0, 1) == 1.0);
  CHECK(cheb_endpoint_derivative(5, 0, -1) == -1.0);
  CHECK(cheb_endpoint_derivative(3, 1, 1) == 9.0);
  // T_4 = 8x^4 - 8x^2 + 1, T_4'' = 96 x^2 - 16.
  const Polynomial t4{1.0, 0.0, -8.0, 0.0, 8.0};
  CHECK(std::abs(cheb_endpoint_derivative(4, 2, -1) - t4.derivative().derivative()(-1.0).real()) < 1e-12);
  CHECK(cheb_endpoint_derivative(3, 4, 1) == 0.0);
  CHECK_THROWS_AS((void)cheb_endpoint_derivative(-1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)cheb_endpoint_derivative(2, -1, 1), std::invalid_argument);

  for (int sign : {1, -1})
    for (int n = 0; n <= 30; ++n)
      for (int l = 0; l <= n; ++l) {
        const double expect = cheb_endpoint_closed_form(n, l, sign);
        CHECK(std::abs(cheb_endpoint_derivative(n, l, sign) - expect) <= 1e-10 * std::abs(expect));
      }

  const auto table = cheb_endpoint_derivative_table(12, 3, -1);
  for (int l = 0; l <= 3; ++l)
    for (int n = 0; n <= 12; ++n)
      CHECK(table[static_cast<std::size_t>(l)][static_cast<std::size_t>(n)] ==
            cheb_endpoint_derivative(n, l, -1));
}

TEST_CASE("DCT-I small cases and naive agreement") {
  const ComplexVector x{1.0, 0.0, 0.0, 0.0};
  for (auto method : {DctMethod::fast, DctMethod::naive})
    for (const auto& y : dct1_forward(x, method)) CHECK(std::abs(y - 0.5) < 1e-15);

  CHECK_THROWS_AS((void)dct1_forward(ComplexVector{1.0, 2.0}), std::invalid_argument);

  // Constant input against an in-test double loop.
  const std::size_t n = 33;
  const ComplexVector ones(n, 1.0);
  const auto y = dct1_forward(ones);
  for (std::size_t m = 0; m < n; ++m) {
    Complex s{0.0};
    for (std::size_t k = 0; k < n; ++k) {
      const double w = (k == 0 || k == n - 1) ? 0.5 : 1.0;
      s += w * std::cos(static_cast<double>(m * k) * kPi / static_cast<double>(n - 1));
    }
    CHECK(std::abs(y[m] - s) <= 1e-13 * std::max(1.0, std::abs(s)));
  }
}

TEST_CASE("fast DCT-I equals naive DCT-I up to nu = 512") {
  for (int nu : {2, 4, 10, 64, 130, 512}) {
    const auto x = random_vector(static_cast<std::size_t>(nu) + 2);
    const auto fast = dct1_forward(x, DctMethod::fast);
    const auto naive = dct1_forward(x, DctMethod::naive);
    CHECK(max_abs_diff(fast, naive) <= 1e-12 * max_abs(naive));
    const auto rfast = dct1_forward_real(std::vector<double>(nu + 2, 0.25), DctMethod::fast);
    const auto rnaive = dct1_forward_real(std::vector<double>(nu + 2, 0.25), DctMethod::naive);
    for (std::size_t i = 0; i < rfast.size(); ++i) CHECK(std::abs(rfast[i] - rnaive[i]) < 1e-12);
  }
}

TEST_CASE("DCT-I roundtrip") {
  for (int nu : {2, 16, 256, 4096}) {
    const auto x = random_vector(static_cast<std::size_t>(nu) + 2);
    for (auto method : {DctMethod::fast, DctMethod::naive}) {
      if (method == DctMethod::naive && nu > 256) continue;
      const auto back = dct1_inverse(dct1_forward(x, method), method);
      CHECK(max_abs_diff(back, x) <= 1e-12 * max_abs(x));
    }
  }
}

TEST_CASE("collocation matrix application") {
  const auto grid = clenshaw_curtis_points(16);
  ComplexVector e0(18, 0.0), e1(18, 0.0);
  e0[0] = 1.0;
  e1[1] = 1.0;
  for (const auto& v : apply_collocation_matrix(e0, grid)) CHECK(std::abs(v - 1.0) < 1e-14);
  const auto g1 = apply_collocation_matrix(e1, grid);
  for (std::size_t m = 0; m < 18; ++m) CHECK(std::abs(g1[m] - grid[m]) < 1e-14);

  const auto alpha = random_vector(18);
  const auto fast = apply_collocation_matrix(alpha, grid);
  for (std::size_t m = 0; m < 18; ++m) {
    Complex s{0.0};
    for (std::size_t k = 0; k < 18; ++k)
      s += alpha[k] * std::cos(static_cast<double>(m * k) * kPi / 17.0);
    CHECK(std::abs(fast[m] - s) < 1e-13);
  }
  CHECK(max_abs_diff(apply_inverse_collocation_matrix(fast, grid), alpha) < 1e-13);
  CHECK_THROWS_AS((void)apply_collocation_matrix(random_vector(17), grid), std::invalid_argument);
}

TEST_CASE("aliasing on the grid") {
  const int nu = 6;
  const auto grid = clenshaw_curtis_points(nu);
  for (int l = 0; l <= nu + 1; ++l)
    for (std::size_t m = 0; m < grid.size(); ++m)
      CHECK(std::abs(cheb_t(nu + 1 + l, grid[m]) - cheb_t(nu + 1 - l, grid[m])) < 1e-13);
  for (long k = 0; k < 60; ++k) {
    const int a = grid_alias_index(k, nu);
    REQUIRE(a >= 0);
    REQUIRE(a <= nu + 1);
    for (std::size_t m = 0; m < grid.size(); ++m)
      CHECK(std::abs(cheb_t(k, grid[m]) - cheb_t(a, grid[m])) < 1e-12);
  }
  const auto c = random_vector(40);
  const auto folded = fold_to_grid(c, nu);
  REQUIRE(folded.size() == 8);
  for (std::size_t m = 0; m < grid.size(); ++m) {
    Complex direct{0.0}, viafold{0.0};
    for (std::size_t k = 0; k < c.size(); ++k) direct += c[k] * cheb_t(static_cast<long>(k), grid[m]);
    for (std::size_t k = 0; k < folded.size(); ++k) viafold += folded[k] * cheb_t(static_cast<long>(k), grid[m]);
    CHECK(std::abs(direct - viafold) < 1e-12);
  }
}

TEST_CASE("multiplication-by-x operator") {
  const auto m = op_mult_x(8);
  CHECK(m.get(0, 1) == Complex{0.5});
  CHECK(m.get(1, 0) == Complex{1.0});
  CHECK(m.get(1, 2) == Complex{0.5});
  CHECK(m.get(0, 0) == Complex{0.0});
  CHECK(m.get(2, 1) == Complex{0.5});
  for (std::size_t k = 0; k < 8; ++k) {
    const Complex expect = (k == 4 || k == 6) ? 0.5 : 0.0;
    CHECK(m.get(k, 5) == expect);
  }
}

TEST_CASE("weighted differentiation operator") {
  const auto d = op_weighted_diff(14);
  CHECK(d.get(0, 1) == Complex{0.5});
  CHECK(d.get(1, 2) == Complex{1.0});
  CHECK(d.get(2, 1) == Complex{-0.5});
  CHECK(d.get(2, 3) == Complex{1.5});
  for (std::size_t k = 0; k < 14; ++k) CHECK(d.get(k, 0) == Complex{0.0});
  const double x = 0.3;
  CHECK(std::abs(eval_column(d, 10, x) - (1.0 - x * x) * cheb_dt(10, x)) < 1e-12);
}

TEST_CASE("banded operator for a linear phase under the (x^2 - 1) row weight") {
  const double w = 100.0;
  const Polynomial rho{-1.0, 0.0, 1.0};
  const auto b = build_banded_operator(rho, Complex{0.0, w} * rho, 12);
  struct Entry {
    std::size_t row, col;
    Complex value;
  };
  const Entry expected[] = {
      {0, 0, -I * w / 2.0}, {0, 1, -0.5},          {0, 2, I * w / 4.0},  {1, 1, -I * w / 4.0},
      {1, 2, -1.0},         {1, 3, I * w / 4.0},   {2, 0, I * w / 2.0},  {2, 1, 0.5},
      {2, 2, -I * w / 2.0}, {2, 3, -1.5},          {2, 4, I * w / 4.0},  {3, 1, I * w / 4.0},
      {3, 2, 1.0},          {3, 3, -I * w / 2.0},  {3, 4, -2.0},         {3, 5, I * w / 4.0},
  };
  for (const auto& e : expected) {
    CAPTURE(e.row);
    CAPTURE(e.col);
    CHECK(std::abs(b.get(e.row, e.col) - e.value) < 1e-12);
  }
  CHECK(std::abs(b.get(0, 3)) == 0.0);
  CHECK(std::abs(b.get(1, 0)) == 0.0);
}

TEST_CASE("banded operator with unit multiplier is the identity") {
  const auto b = build_banded_operator(Polynomial{}, Polynomial::constant(1.0), 10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) CHECK(b.get(i, j) == Complex{i == j ? 1.0 : 0.0});
}

TEST_CASE("banded operator rejects a p_diff that is not a multiple of 1 - x^2") {
  CHECK_THROWS_AS((void)build_banded_operator(Polynomial{1.0, 1.0}, Polynomial{}, 10),
                  std::invalid_argument);
}

TEST_CASE("banded operator columns agree with pointwise evaluation") {
  for (int trial = 0; trial < 6; ++trial) {
    const double w = trial < 3 ? 1.0 : 100.0;
    const int dq = trial % 3;
    const Polynomial p_diff = Polynomial::one_minus_x_squared() * random_polynomial(dq);
    const Polynomial p_mult = Complex{w} * random_polynomial(3 + dq);
    const std::size_t rows = 70;
    const auto b = build_banded_operator(p_diff, p_mult, rows);
    const int d = std::max(p_diff.degree() - 1, p_mult.degree());
    const auto [lo, up] = b.occupied_bandwidths();
    CHECK(lo <= d);
    CHECK(up <= d);
    for (std::size_t n = 0; n + static_cast<std::size_t>(d) < rows && n <= 60; ++n) {
      for (int k = 0; k < 20; ++k) {
        const double x = uniform(-0.999, 0.999);
        const Complex direct = p_diff(x) * cheb_dt(static_cast<long>(n), x) + p_mult(x) * cheb_t(static_cast<long>(n), x);
        CHECK(std::abs(eval_column(b, n, x) - direct) <= 1e-10 * w);
      }
    }
  }
}

TEST_CASE("scalar operator bandwidth is at most 2d + 3") {
  for (int d = 1; d <= 6; ++d) {
    const Polynomial g = random_polynomial(d);
    const Polynomial rho{-1.0, 0.0, 1.0};
    const auto b = build_banded_operator(rho, Complex{0.0, 50.0} * rho * g.derivative(), 40);
    const auto [lo, up] = b.occupied_bandwidths();
    CHECK(lo + up + 1 <= 2 * d + 3);
  }
}

TEST_CASE("folding without aliased rows is truncation") {
  const int nu = 10;
  BandedMatrix b(20, 1, 1);
  for (std::size_t j = 0; j + 2 <= nu; ++j) {  // columns n <= nu - d - 1
    b.set(j, j, random_complex());
    b.set(j + 1, j, random_complex());
  }
  const auto f = fold_operator(b, nu, 1);
  REQUIRE(f.size() == 12);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) CHECK(f.get(i, j) == b.get(i, j));
}

TEST_CASE("folded operator reproduces collocation of the weighted operator") {
  const double w = 100.0;
  const int nu = 8;
  const Polynomial rho{-1.0, 0.0, 1.0};
  const auto b = build_banded_operator(rho, Complex{0.0, w} * rho, 40);
  const auto f = fold_operator(b, nu, 1);
  const auto grid = clenshaw_curtis_points(nu);
  for (std::size_t n = 0; n < f.size(); ++n)
    for (std::size_t m = 0; m < grid.size(); ++m) {
      const double x = grid[m];
      Complex folded{0.0};
      for (std::size_t k = 0; k < f.size(); ++k) folded += f.get(k, n) * cheb_t(static_cast<long>(k), x);
      // rho T_n' is polynomial; at the endpoints use T_n'(+-1) = (+-1)^{n+1} n^2.
      const double dt = (m == 0 || m + 1 == grid.size())
                            ? cheb_endpoint_closed_form(static_cast<int>(n), 1, m == 0 ? 1 : -1)
                            : cheb_dt(static_cast<long>(n), x);
      const Complex direct = (x * x - 1.0) * (dt + I * w * cheb_t(static_cast<long>(n), x));
      CHECK(std::abs(folded - direct) < 1e-11 * w);
    }
}

TEST_CASE("folding requires nu > d") {
  const auto b = build_banded_operator(Polynomial::one_minus_x_squared(), Polynomial{0.0, 0.0, 0.0, 1.0}, 40);
  CHECK_THROWS_AS((void)fold_operator(b, 2, 3), UnsupportedRegimeError);
}
