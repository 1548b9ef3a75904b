#include "oscillquad/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace oscillquad {

Polynomial::Polynomial(ComplexVector coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void Polynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == Complex{0.0}) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Complex{0.0});
}

Complex Polynomial::operator()(Complex x) const noexcept {
  Complex acc{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial{};
  ComplexVector d(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = static_cast<double>(j) * coeffs_[j];
  return Polynomial(std::move(d));
}

ComplexVector Polynomial::taylor_coefficients(double x0, int order) const {
  // Repeated synthetic division by (x - x0) yields the shifted coefficients.
  ComplexVector work = coeffs_;
  ComplexVector out(static_cast<std::size_t>(std::max(order, 0)) + 1, Complex{0.0});
  const int n = static_cast<int>(work.size());
  for (int k = 0; k < n && k <= order; ++k) {
    for (int j = n - 2; j >= k; --j) work[j] += x0 * work[j + 1];
    out[k] = work[k];
  }
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
  const int dn = divisor.degree();
  if (degree() < dn) return {Polynomial{}, *this};
  ComplexVector rem = coeffs_;
  ComplexVector quot(static_cast<std::size_t>(degree() - dn) + 1, Complex{0.0});
  const Complex lead = divisor.coeffs_.back();
  for (int k = degree() - dn; k >= 0; --k) {
    const Complex q = rem[k + dn] / lead;
    quot[k] = q;
    for (int j = 0; j <= dn; ++j) rem[k + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(std::max(dn, 1));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  ComplexVector c(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex{0.0});
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j) c[j] += a.coeffs_[j];
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[j] += b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Complex{-1.0} * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  ComplexVector c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex{0.0});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex s, const Polynomial& p) {
  ComplexVector c = p.coeffs_;
  for (auto& v : c) v *= s;
  return Polynomial(std::move(c));
}

}  // namespace oscillquad
