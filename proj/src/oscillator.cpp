#include "oscillquad/oscillator.hpp"

#include <algorithm>
#include <cmath>

#include "oscillquad/bessel.hpp"

namespace oscillquad {
namespace {

constexpr Complex kI{0.0, 1.0};

double grid_point(int k, int count) { return -1.0 + 2.0 * k / (count - 1); }

// True when p has a zero on [-1, 1], judged from `count` equispaced samples.
bool vanishes_on_interval(const Polynomial& p, int count) {
  double scale = 0.0;
  std::vector<Complex> values(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    values[k] = p(grid_point(k, count));
    scale = std::max(scale, std::abs(values[k]));
  }
  if (scale == 0.0) return true;
  for (int k = 0; k < count; ++k) {
    if (std::abs(values[k]) <= 1e-12 * scale) return true;
    if (k == 0) continue;
    // A sign change of either component, with the other one small, brackets a root.
    const Complex a = values[k - 1], b = values[k];
    const bool re_flip = a.real() * b.real() < 0.0;
    const bool im_flip = a.imag() * b.imag() < 0.0;
    const bool im_small = std::max(std::abs(a.imag()), std::abs(b.imag())) <= 1e-12 * scale;
    const bool re_small = std::max(std::abs(a.real()), std::abs(b.real())) <= 1e-12 * scale;
    if ((re_flip && im_small) || (im_flip && re_small)) return true;
  }
  return false;
}

}  // namespace

int cleared_degree(const Polynomial& r, const PolynomialMatrix& rg) {
  int d = r.degree();
  for (const auto& row : rg)
    for (const auto& p : row) d = std::max(d, p.degree());
  return d;
}

OscillatorSystem make_exponential(const Polynomial& g, double omega) {
  const Polynomial dg = g.derivative();
  if (g.degree() < 1 || vanishes_on_interval(dg, 1000))
    throw UnsupportedOscillatorError("make_exponential: g' vanishes in [-1, 1] (stationary point)");
  OscillatorSystem sys;
  sys.m = 1;
  sys.omega = omega;
  sys.r = Polynomial::constant(1.0);
  sys.rg = {{Complex{0.0, omega} * dg}};
  sys.w_plus = {std::exp(kI * omega * g(1.0))};
  sys.w_minus = {std::exp(kI * omega * g(-1.0))};
  sys.d = g.degree();
  sys.weight = [g, omega](double x) { return ComplexVector{std::exp(kI * omega * g(x))}; };
  return sys;
}

OscillatorSystem make_bessel(double gamma, double a, double omega,
                             const BesselEndpointValues& endpoints) {
  if (std::abs(a) <= 1.0)
    throw PoleInIntervalError("make_bessel: |a| <= 1 puts a pole of G inside [-1, 1]");
  OscillatorSystem sys;
  sys.m = 2;
  sys.omega = omega;
  const Polynomial shift{a, 1.0};
  sys.r = shift * shift;
  sys.rg = {{Polynomial{}, Complex{omega} * sys.r},
            {Complex{-omega} * sys.r + Polynomial::constant(gamma * gamma / omega),
             Complex{-1.0} * shift}};
  sys.w_plus = {endpoints.j_plus, endpoints.dj_plus};
  sys.w_minus = {endpoints.j_minus, endpoints.dj_minus};
  sys.d = 2;
  return sys;
}

OscillatorSystem make_bessel(int gamma, double a, double omega) {
  if (gamma < 0) throw std::domain_error("make_bessel: negative order");
  if (std::abs(a) <= 1.0)
    throw PoleInIntervalError("make_bessel: |a| <= 1 puts a pole of G inside [-1, 1]");
  const BesselValue plus = bessel_eval_signed(gamma, omega * (1.0 + a));
  const BesselValue minus = bessel_eval_signed(gamma, omega * (-1.0 + a));
  OscillatorSystem sys = make_bessel(static_cast<double>(gamma), a, omega,
                                     {plus.j, plus.dj, minus.j, minus.dj});
  sys.weight = [gamma, a, omega](double x) {
    const BesselValue b = bessel_eval_signed(gamma, omega * (x + a));
    return ComplexVector{b.j, b.dj};
  };
  return sys;
}

SystemDiagnostics validate_system(const OscillatorSystem& sys) {
  SystemDiagnostics diag;
  diag.m = sys.m;
  diag.degree_r = sys.r.degree();
  diag.d = sys.d;
  if (sys.m < 1) {
    diag.message = "M must be at least 1";
    return diag;
  }
  const auto m = static_cast<std::size_t>(sys.m);
  if (sys.rg.size() != m || std::any_of(sys.rg.begin(), sys.rg.end(),
                                        [m](const auto& row) { return row.size() != m; })) {
    diag.message = "rG must be an M x M array";
    return diag;
  }
  if (sys.w_plus.size() != m || sys.w_minus.size() != m) {
    diag.message = "w(+1) and w(-1) must have M entries";
    return diag;
  }
  for (const auto& row : sys.rg)
    for (const auto& p : row) diag.max_degree_rg = std::max(diag.max_degree_rg, p.degree());
  if (vanishes_on_interval(sys.r, 1001)) {
    diag.message = "r has a root in [-1, 1]";
    return diag;
  }
  diag.valid = true;
  diag.message = "ok";
  return diag;
}

}  // namespace oscillquad
