#include "oscillquad/reference.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "oscillquad/dct.hpp"
#include "oscillquad/jet.hpp"

namespace oscillquad {
namespace {

double binomial(int n, int k) {
  double b = 1.0;
  for (int t = 1; t <= k; ++t) b = b * (n - k + t) / t;
  return b;
}

// Compensated complex accumulator.
class NeumaierSum {
 public:
  void add(Complex v) {
    add_part(sum_re_, comp_re_, v.real());
    add_part(sum_im_, comp_im_, v.imag());
  }
  [[nodiscard]] Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double& sum, double& comp, double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double sum_re_ = 0.0, comp_re_ = 0.0, sum_im_ = 0.0, comp_im_ = 0.0;
};

// G_{ki}^{(l)}(x0) for l = 0..order.
ComplexVector g_derivatives(const OscillatorSystem& sys, int k, int i, double x0, int order) {
  const ComplexVector num = sys.rg[k][i].taylor_coefficients(x0, order);
  const ComplexVector den = sys.r.taylor_coefficients(x0, order);
  return jet_to_derivatives(jet_div(num, den));
}

}  // namespace

DenseMatrix dense_collocation_matrix(const OscillatorSystem& sys, int nu, int s) {
  const ClenshawCurtisGrid grid = clenshaw_curtis_points(nu);
  if (s < 0) throw std::invalid_argument("dense_collocation_matrix: s must be >= 0");
  const auto m = static_cast<std::size_t>(sys.m);
  const auto basis = static_cast<std::size_t>(nu + 2 * s + 2);
  if (m * basis > kDenseSizeLimit)
    throw std::invalid_argument("dense_collocation_matrix: system exceeds the dense size limit");
  DenseMatrix a(m * basis, m * basis);

  const long period = 2L * (nu + 1);
  const double step = std::numbers::pi / (nu + 1);
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const double x = grid[c];
    const double sin_theta = std::sin(static_cast<double>(c) * step);
    std::vector<double> t_val(basis), t_der(basis);
    for (std::size_t n = 0; n < basis; ++n) {
      const long reduced = static_cast<long>(n * c) % period;
      const auto dn = static_cast<double>(n);
      t_val[n] = std::cos(static_cast<double>(reduced) * step);
      if (c == 0) {
        t_der[n] = dn * dn;
      } else if (c + 1 == grid.size()) {
        t_der[n] = (n % 2 == 0 ? -1.0 : 1.0) * dn * dn;
      } else {
        t_der[n] = dn * std::sin(static_cast<double>(reduced) * step) / sin_theta;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t row = i * basis + c;
      for (std::size_t k = 0; k < m; ++k) {
        const Complex g = sys.g_entry(static_cast<int>(k), static_cast<int>(i), x);
        for (std::size_t n = 0; n < basis; ++n)
          a(row, k * basis + n) = (i == k ? t_der[n] : 0.0) + g * t_val[n];
      }
    }
  }

  for (const int sign : {1, -1}) {
    const auto table = cheb_endpoint_derivative_table(static_cast<int>(basis) - 1, s + 1, sign);
    const std::size_t offset = grid.size() + (sign > 0 ? 0 : static_cast<std::size_t>(s));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        const ComplexVector gd =
            g_derivatives(sys, static_cast<int>(k), static_cast<int>(i), sign, s);
        for (int l = 1; l <= s; ++l) {
          const std::size_t row = i * basis + offset + static_cast<std::size_t>(l - 1);
          for (std::size_t n = 0; n < basis; ++n) {
            Complex v = i == k ? Complex{table[l + 1][n]} : Complex{0.0};
            for (int t = 0; t <= l; ++t) v += binomial(l, t) * gd[l - t] * table[t][n];
            a(row, k * basis + n) = v;
          }
        }
      }
    }
  }
  return a;
}

ComplexVector dense_collocation_rhs(const LevinProblem& problem) {
  const ClenshawCurtisGrid grid = clenshaw_curtis_points(problem.nu);
  const auto m = static_cast<std::size_t>(problem.sys.m);
  const int s = problem.s;
  const auto basis = static_cast<std::size_t>(problem.nu + 2 * s + 2);
  if (problem.f.size() != m) throw std::invalid_argument("dense solve: amplitude has wrong component count");
  if (s > 0 && problem.f.derivative_order() < s)
    throw std::invalid_argument("dense solve: endpoint derivatives of f up to order " +
                                std::to_string(s) + " are required");
  ComplexVector rhs(m * basis);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < grid.size(); ++c) rhs[i * basis + c] = problem.f.components[i](grid[c]);
    for (int l = 1; l <= s; ++l) {
      rhs[i * basis + grid.size() + l - 1] = problem.f.derivs_plus[i][l];
      rhs[i * basis + grid.size() + s + l - 1] = problem.f.derivs_minus[i][l];
    }
  }
  return rhs;
}

namespace {

QuadratureResult package_solution(const LevinProblem& problem, const ComplexVector& x,
                                  SolverPath path, std::chrono::steady_clock::time_point start) {
  QuadratureResult result;
  const auto basis = static_cast<std::size_t>(problem.nu + 2 * problem.s + 2);
  for (int k = 0; k < problem.sys.m; ++k)
    result.coeffs.push_back(ChebCoeffVector{
        ComplexVector(x.begin() + static_cast<long>(k * basis),
                      x.begin() + static_cast<long>((k + 1) * basis))});
  result.value = assemble_value(problem.sys, result.coeffs);
  result.path = path;
  result.nu = problem.nu;
  result.s = problem.s;
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  attach_residual(problem, result);
  return result;
}

}  // namespace

QuadratureResult dense_levin_solve(const LevinProblem& problem) {
  const auto start = std::chrono::steady_clock::now();
  const DenseMatrix a = dense_collocation_matrix(problem.sys, problem.nu, problem.s);
  const ComplexVector rhs = dense_collocation_rhs(problem);
  ComplexVector x;
  try {
    x = DenseLU(a).solve(rhs);
  } catch (const SingularMatrixError& e) {
    throw UnsolvableProblemError(std::string("dense collocation system is singular: ") + e.what());
  }
  return package_solution(problem, x, SolverPath::dense, start);
}

QuadratureResult dense_levin_lstsq(const LevinProblem& problem) {
  const auto start = std::chrono::steady_clock::now();
  const DenseMatrix a = dense_collocation_matrix(problem.sys, problem.nu, problem.s);
  const ComplexVector x = dense_lstsq(a, dense_collocation_rhs(problem), 1e-12);
  return package_solution(problem, x, SolverPath::dense_fallback, start);
}

std::vector<double> clenshaw_curtis_weights(std::size_t n_points) {
  if (n_points < 8 || n_points % 2 != 0)
    throw std::invalid_argument("clenshaw_curtis_weights: n_points must be even and >= 8");
  const std::size_t half = n_points / 2;
  std::vector<double> moments(half + 1, 0.0);
  for (std::size_t j = 1; j <= half; ++j) {
    const auto dj = static_cast<double>(j);
    moments[j] = 2.0 / (4.0 * dj * dj - 1.0);
  }
  const std::vector<double> y = dct1_forward_real(moments);
  std::vector<double> w(n_points + 1);
  const auto n = static_cast<double>(n_points);
  for (std::size_t k = 0; k <= half; ++k) {
    const double c = (k == 0) ? 1.0 : 2.0;
    w[k] = c / n * (1.0 - y[k]);
    w[n_points - k] = w[k];
  }
  return w;
}

Complex cc_oracle(const Integrand& integrand, std::size_t n_points) {
  const std::vector<double> w = clenshaw_curtis_weights(n_points);
  const auto n = static_cast<double>(n_points);
  NeumaierSum sum;
  for (std::size_t k = 0; k <= n_points; ++k) {
    // cos(k pi / n) written as a sine for accuracy near the endpoints.
    const double x = std::sin(std::numbers::pi * (n - 2.0 * static_cast<double>(k)) / (2.0 * n));
    sum.add(w[k] * integrand(x));
  }
  return sum.value();
}

Integrand levin_integrand(const OscillatorSystem& sys, const AmplitudeSpec& f) {
  if (!sys.weight)
    throw std::invalid_argument("oracle needs the interior weight, which this system does not define");
  if (f.size() != static_cast<std::size_t>(sys.m))
    throw std::invalid_argument("amplitude has wrong component count");
  return [sys, f](double x) {
    const ComplexVector w = sys.weight(x);
    Complex acc{0.0};
    for (std::size_t i = 0; i < w.size(); ++i) acc += f.components[i](x) * w[i];
    return acc;
  };
}

}  // namespace oscillquad
