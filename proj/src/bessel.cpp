#include "oscillquad/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oscillquad {
namespace {

constexpr double kRescaleAbove = 1e250;

bool use_asymptotic(int gamma, double x) { return x > 50.0 * (gamma + 1); }

// sum_k (-1)^k (x/2)^{n+2k} / (k! (n+k)!); terms shrink monotonically for x <= 1.
double power_series(int n, double x) {
  const double h = 0.5 * x;
  double term = std::exp(n * std::log(h) - std::lgamma(n + 1.0));
  double sum = 0.0;
  for (int k = 0; k < 30 && term != 0.0; ++k) {
    sum += term;
    term *= -h * h / ((k + 1.0) * (n + k + 1.0));
  }
  return sum;
}

// J_0 .. J_{n_max}(x) for x > 0.
std::vector<double> miller(int n_max, double x) {
  const double top = std::max(static_cast<double>(n_max), x);
  int start = static_cast<int>(top + 15.0 * std::cbrt(top) + 40.0);
  start += start % 2;
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  double next = 0.0;  // J_{k+1}
  double cur = 1e-300;  // J_k
  double norm = 0.0;
  for (int k = start; k >= 1; --k) {
    const double prev = 2.0 * k / x * cur - next;  // J_{k-1}
    next = cur;
    cur = prev;
    if (k - 1 <= n_max) out[k - 1] = cur;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * cur;
    if (std::abs(cur) > kRescaleAbove) {
      cur /= kRescaleAbove;
      next /= kRescaleAbove;
      norm /= kRescaleAbove;
      for (int m = k - 1; m <= n_max; ++m) out[m] /= kRescaleAbove;
    }
  }
  norm += cur;  // J_0 term
  for (auto& v : out) v /= norm;
  return out;
}

// Hankel expansion J_n(x) ~ sqrt(2 / (pi x)) (P cos chi - Q sin chi).
double hankel(int n, double x) {
  const double mu = 4.0 * n * n;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(term) > last && k > 2) break;
    last = std::abs(term);
    // a_k / x^k enters P for even k and Q for odd k, with alternating signs.
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
    if (last < 1e-17) break;
  }
  const double c = (0.5 * n + 0.25) * std::numbers::pi;
  const double cos_chi = std::cos(x) * std::cos(c) + std::sin(x) * std::sin(c);
  const double sin_chi = std::sin(x) * std::cos(c) - std::cos(x) * std::sin(c);
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace

BesselValue bessel_eval(int gamma, double x) {
  if (gamma < 0) throw std::domain_error("bessel_eval: negative order");
  if (!(x > 0.0)) throw std::domain_error("bessel_eval: x must be positive");
  if (use_asymptotic(gamma, x)) {
    const double j = hankel(gamma, x);
    const double up = hankel(gamma + 1, x);
    const double dj = gamma == 0 ? -up : 0.5 * (hankel(gamma - 1, x) - up);
    return {j, dj};
  }
  if (x <= 1.0) {
    const double j = power_series(gamma, x);
    const double up = power_series(gamma + 1, x);
    const double dj = gamma == 0 ? -up : 0.5 * (power_series(gamma - 1, x) - up);
    return {j, dj};
  }
  const auto v = miller(gamma + 1, x);
  const double dj = gamma == 0 ? -v[1] : 0.5 * (v[gamma - 1] - v[gamma + 1]);
  return {v[gamma], dj};
}

BesselValue bessel_eval_signed(int gamma, double x) {
  if (x == 0.0) {
    if (gamma < 0) throw std::domain_error("bessel_eval: negative order");
    return {gamma == 0 ? 1.0 : 0.0, gamma == 1 ? 0.5 : 0.0};
  }
  if (x > 0.0) return bessel_eval(gamma, x);
  const BesselValue b = bessel_eval(gamma, -x);
  // J_n(-x) = (-1)^n J_n(x), so J_n'(-x) = (-1)^{n+1} J_n'(x).
  const double s = gamma % 2 == 0 ? 1.0 : -1.0;
  return {s * b.j, -s * b.dj};
}

}  // namespace oscillquad
