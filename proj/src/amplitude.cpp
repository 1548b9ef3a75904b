#include "oscillquad/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oscillquad/jet.hpp"

namespace oscillquad {
namespace {

// Builds an amplitude whose first component is `f1` with endpoint
// derivatives `d1_plus`, `d1_minus`; the other components vanish.
AmplitudeSpec first_component(int m, int order, ScalarFunction f1, ComplexVector d1_plus,
                              ComplexVector d1_minus) {
  if (m < 1) throw std::invalid_argument("amplitude: M must be at least 1");
  AmplitudeSpec spec;
  spec.components.assign(static_cast<std::size_t>(m), [](double) { return Complex{0.0}; });
  spec.components[0] = std::move(f1);
  const auto len = static_cast<std::size_t>(order) + 1;
  spec.derivs_plus.assign(static_cast<std::size_t>(m), ComplexVector(len, Complex{0.0}));
  spec.derivs_minus = spec.derivs_plus;
  spec.derivs_plus[0] = std::move(d1_plus);
  spec.derivs_minus[0] = std::move(d1_minus);
  return spec;
}

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("amplitude: derivative order must be >= 0");
}

ComplexVector runge_derivatives(double x0, int order) {
  const auto len = static_cast<std::size_t>(order) + 1;
  ComplexVector num(len, Complex{0.0}), den(len, Complex{0.0});
  num[0] = x0;
  if (len > 1) num[1] = 1.0;
  den[0] = x0 * x0 + 0.02;
  if (len > 1) den[1] = 2.0 * x0;
  if (len > 2) den[2] = 1.0;
  return jet_to_derivatives(jet_div(num, den));
}

}  // namespace

int AmplitudeSpec::derivative_order() const noexcept {
  if (derivs_plus.size() != components.size() || derivs_minus.size() != components.size() ||
      components.empty())
    return -1;
  std::size_t len = derivs_plus.front().size();
  for (std::size_t i = 0; i < components.size(); ++i)
    len = std::min({len, derivs_plus[i].size(), derivs_minus[i].size()});
  return static_cast<int>(len) - 1;
}

ComplexVector AmplitudeSpec::operator()(double x) const {
  ComplexVector out(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) out[i] = components[i](x);
  return out;
}

AmplitudeSpec amplitude_rational_runge(int m, int order) {
  check_order(order);
  return first_component(
      m, order, [](double x) { return Complex{x / (x * x + 0.02)}; },
      runge_derivatives(1.0, order), runge_derivatives(-1.0, order));
}

AmplitudeSpec amplitude_one(int m, int order) {
  check_order(order);
  ComplexVector d(static_cast<std::size_t>(order) + 1, Complex{0.0});
  d[0] = 1.0;
  return first_component(m, order, [](double) { return Complex{1.0}; }, d, d);
}

AmplitudeSpec amplitude_cos(int m, int order) {
  check_order(order);
  const auto derivs = [order](double x0) {
    ComplexVector d(static_cast<std::size_t>(order) + 1);
    for (int l = 0; l <= order; ++l) d[l] = std::cos(x0 + l * std::numbers::pi / 2.0);
    return d;
  };
  return first_component(m, order, [](double x) { return Complex{std::cos(x)}; }, derivs(1.0),
                         derivs(-1.0));
}

AmplitudeSpec amplitude_zero(int m, int order) {
  check_order(order);
  const ComplexVector d(static_cast<std::size_t>(order) + 1, Complex{0.0});
  return first_component(m, order, [](double) { return Complex{0.0}; }, d, d);
}

AmplitudeSpec amplitude_manufactured(const OscillatorSystem& sys,
                                     const std::vector<ChebCoeffVector>& p, int order) {
  check_order(order);
  if (p.size() != static_cast<std::size_t>(sys.m))
    throw std::invalid_argument("amplitude_manufactured: need one series per component");
  const auto m = p.size();
  std::vector<ChebCoeffVector> dp;
  for (const auto& series : p) dp.push_back(cheb_derivative(series));

  AmplitudeSpec spec;
  for (std::size_t i = 0; i < m; ++i) {
    spec.components.push_back([sys, p, dp, i](double x) {
      Complex acc = cheb_eval(dp[i], x);
      for (std::size_t j = 0; j < p.size(); ++j)
        acc += sys.g_entry(static_cast<int>(j), static_cast<int>(i), x) * cheb_eval(p[j], x);
      return acc;
    });
  }

  // Endpoint derivatives from Taylor jets of p_j, rG_ji and r.
  const auto len = static_cast<std::size_t>(order) + 1;
  for (const int sign : {1, -1}) {
    const double x0 = sign;
    int n_max = 0;
    for (const auto& series : p) n_max = std::max(n_max, static_cast<int>(series.size()) - 1);
    const auto table = cheb_endpoint_derivative_table(n_max, order + 1, sign);
    // jets[j][k] = p_j^{(k)}(x0) / k! for k = 0..order + 1.
    std::vector<ComplexVector> jets(m, ComplexVector(len + 1, Complex{0.0}));
    for (std::size_t j = 0; j < m; ++j) {
      ComplexVector derivs(len + 1, Complex{0.0});
      for (std::size_t k = 0; k <= len; ++k)
        for (std::size_t n = 0; n < p[j].size(); ++n) derivs[k] += table[k][n] * p[j].coeffs[n];
      jets[j] = derivatives_to_jet(derivs);
    }
    const ComplexVector r_jet = sys.r.taylor_coefficients(x0, order);
    auto& out = sign > 0 ? spec.derivs_plus : spec.derivs_minus;
    out.assign(m, ComplexVector{});
    for (std::size_t i = 0; i < m; ++i) {
      ComplexVector coupled(len, Complex{0.0});
      for (std::size_t j = 0; j < m; ++j) {
        const ComplexVector rg_jet = sys.rg[j][i].taylor_coefficients(x0, order);
        const ComplexVector pj(jets[j].begin(), jets[j].begin() + static_cast<long>(len));
        const ComplexVector prod = jet_mul(rg_jet, pj);
        for (std::size_t k = 0; k < len; ++k) coupled[k] += prod[k];
      }
      ComplexVector f_jet = jet_div(coupled, r_jet);
      // Jet of p_i' is the shifted jet of p_i times (k + 1).
      for (std::size_t k = 0; k < len; ++k)
        f_jet[k] += static_cast<double>(k + 1) * jets[i][k + 1];
      out[i] = jet_to_derivatives(f_jet);
    }
  }
  return spec;
}

Complex boundary_value(const OscillatorSystem& sys, const std::vector<ChebCoeffVector>& p) {
  Complex value{0.0};
  for (std::size_t k = 0; k < p.size(); ++k)
    value += p[k].value_at_plus_one() * sys.w_plus[k] - p[k].value_at_minus_one() * sys.w_minus[k];
  return value;
}

}  // namespace oscillquad
