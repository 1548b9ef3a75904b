#include "oscillquad/operators.hpp"

#include <algorithm>
#include <cmath>

#include "oscillquad/chebyshev.hpp"

namespace oscillquad {
namespace {

void check_rows(std::size_t n_rows) {
  if (n_rows < 2) throw std::invalid_argument("operator matrices need at least 2 rows");
}

// Coefficients over a contiguous index window [lo, lo + v.size()).
struct Window {
  std::size_t lo;
  ComplexVector v;
};

Window times_x(const Window& in) {
  Window out{in.lo, ComplexVector(in.v.size(), Complex{0.0})};
  for (std::size_t t = 0; t < in.v.size(); ++t) {
    const Complex a = in.v[t];
    if (a == Complex{0.0}) continue;
    const std::size_t k = in.lo + t;
    if (k == 0) {
      out.v[1 - in.lo] += a;
    } else {
      out.v[t - 1] += 0.5 * a;
      out.v[t + 1] += 0.5 * a;
    }
  }
  return out;
}

Window weighted_diff(const Window& in) {
  Window out{in.lo, ComplexVector(in.v.size(), Complex{0.0})};
  for (std::size_t t = 0; t < in.v.size(); ++t) {
    const Complex a = in.v[t];
    const std::size_t k = in.lo + t;
    if (a == Complex{0.0} || k == 0) continue;
    const double half_k = 0.5 * static_cast<double>(k);
    out.v[t - 1] += half_k * a;
    out.v[t + 1] -= half_k * a;
  }
  return out;
}

// p(X) applied to `in` by Horner's rule.
Window poly_times(const Polynomial& p, const Window& in) {
  const auto& c = p.coeffs();
  Window acc{in.lo, ComplexVector(in.v.size(), Complex{0.0})};
  for (int k = p.degree(); k >= 0; --k) {
    acc = times_x(acc);
    for (std::size_t t = 0; t < in.v.size(); ++t) acc.v[t] += c[k] * in.v[t];
  }
  return acc;
}

}  // namespace

BandedMatrix op_mult_x(std::size_t n_rows) {
  check_rows(n_rows);
  BandedMatrix m(n_rows, 1, 1);
  m.ref(1, 0) = 1.0;
  for (std::size_t n = 1; n < n_rows; ++n) {
    m.ref(n - 1, n) = 0.5;
    if (n + 1 < n_rows) m.ref(n + 1, n) = 0.5;
  }
  return m;
}

BandedMatrix op_weighted_diff(std::size_t n_rows) {
  check_rows(n_rows);
  BandedMatrix m(n_rows, 1, 1);
  for (std::size_t n = 1; n < n_rows; ++n) {
    const double half_n = 0.5 * static_cast<double>(n);
    m.ref(n - 1, n) = half_n;
    if (n + 1 < n_rows) m.ref(n + 1, n) = -half_n;
  }
  return m;
}

BandedMatrix build_banded_operator(const Polynomial& p_diff, const Polynomial& p_mult,
                                   std::size_t n_rows) {
  check_rows(n_rows);
  const auto [q, rem] = p_diff.divide(Polynomial::one_minus_x_squared());
  double scale = 0.0;
  for (const auto& c : p_diff.coeffs()) scale = std::max(scale, std::abs(c));
  for (const auto& c : rem.coeffs())
    if (std::abs(c) > 1e-12 * scale)
      throw std::invalid_argument("build_banded_operator: p_diff is not a multiple of 1 - x^2");

  const bool has_diff = !p_diff.is_zero();
  const int half = std::max(has_diff ? q.degree() + 1 : 0, p_mult.degree());
  if (static_cast<std::size_t>(half) >= n_rows)
    throw std::invalid_argument("build_banded_operator: polynomial degree too large for " +
                                std::to_string(n_rows) + " rows");

  BandedMatrix b(n_rows, half, half);
  const auto h = static_cast<std::size_t>(half);
  for (std::size_t n = 0; n < n_rows; ++n) {
    const std::size_t lo = n > h + 1 ? n - h - 1 : 0;
    Window unit{lo, ComplexVector(n + h + 2 - lo, Complex{0.0})};
    unit.v[n - lo] = 1.0;
    Window col = poly_times(p_mult, unit);
    if (has_diff) {
      const Window diff = poly_times(q, weighted_diff(unit));
      for (std::size_t t = 0; t < col.v.size(); ++t) col.v[t] += diff.v[t];
    }
    for (std::size_t t = 0; t < col.v.size(); ++t) {
      const std::size_t k = lo + t;
      if (k < n_rows && col.v[t] != Complex{0.0}) b.ref(k, n) = col.v[t];
    }
  }
  return b;
}

BandedMatrix fold_operator(const BandedMatrix& b, int nu, int d) {
  if (nu <= d)
    throw UnsupportedRegimeError("fold_operator: need nu > d (nu = " + std::to_string(nu) +
                                 ", d = " + std::to_string(d) + ")");
  const auto size = static_cast<std::size_t>(nu) + 2;
  if (b.size() < size + static_cast<std::size_t>(b.lower_bw()))
    throw std::invalid_argument("fold_operator: operator matrix has too few rows");
  if (b.lower_bw() > nu + 1)
    throw UnsupportedRegimeError("fold_operator: operator bandwidth exceeds grid resolution");

  const int lower = b.lower_bw();
  BandedMatrix folded(size, lower, std::max(lower, b.upper_bw()));
  for (std::size_t n = 0; n < size; ++n) {
    const std::size_t lo = n > static_cast<std::size_t>(b.upper_bw()) ? n - b.upper_bw() : 0;
    const std::size_t hi = n + static_cast<std::size_t>(lower);
    for (std::size_t k = lo; k <= hi; ++k) {
      const Complex v = b.ref(k, n);
      if (v == Complex{0.0}) continue;
      const auto row = static_cast<std::size_t>(grid_alias_index(static_cast<long>(k), nu));
      folded.ref(row, n) += v;
    }
  }
  return folded;
}

ComplexVector folded_column(const BandedMatrix& b, std::size_t n, int nu) {
  if (n >= b.size()) throw std::invalid_argument("folded_column: column out of range");
  ComplexVector out(static_cast<std::size_t>(nu) + 2, Complex{0.0});
  const std::size_t lo = n > static_cast<std::size_t>(b.upper_bw()) ? n - b.upper_bw() : 0;
  const std::size_t hi = std::min(b.size() - 1, n + static_cast<std::size_t>(b.lower_bw()));
  for (std::size_t k = lo; k <= hi; ++k)
    out[grid_alias_index(static_cast<long>(k), nu)] += b.ref(k, n);
  return out;
}

}  // namespace oscillquad
