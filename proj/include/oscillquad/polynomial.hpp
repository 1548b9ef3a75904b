#pragma once

#include <initializer_list>
#include <span>

#include "oscillquad/types.hpp"

namespace oscillquad {

/// Dense polynomial in the monomial basis; coeffs()[j] multiplies x^j.
///
/// Trailing zero coefficients are stripped on construction, so degree() is
/// the index of the last nonzero coefficient. The zero polynomial keeps a
/// single zero coefficient and reports degree 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex{0.0}} {}
  explicit Polynomial(ComplexVector coeffs);
  Polynomial(std::initializer_list<Complex> coeffs)
      : Polynomial(ComplexVector(coeffs)) {}

  static Polynomial constant(Complex c) { return Polynomial({c}); }
  /// 1 - x^2
  static Polynomial one_minus_x_squared() { return Polynomial({1.0, 0.0, -1.0}); }

  [[nodiscard]] const ComplexVector& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] int degree() const noexcept {
    return static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] bool is_zero() const noexcept {
    return coeffs_.size() == 1 && coeffs_[0] == Complex{0.0};
  }
  [[nodiscard]] Complex coeff(int j) const noexcept {
    return (j >= 0 && j < static_cast<int>(coeffs_.size())) ? coeffs_[j] : Complex{0.0};
  }

  /// Horner evaluation.
  [[nodiscard]] Complex operator()(Complex x) const noexcept;
  [[nodiscard]] Complex operator()(double x) const noexcept { return (*this)(Complex{x}); }

  [[nodiscard]] Polynomial derivative() const;
  /// Taylor coefficients about x0 up to and including `order`:
  /// result[k] = p^{(k)}(x0) / k!.
  [[nodiscard]] ComplexVector taylor_coefficients(double x0, int order) const;

  /// Exact division by `divisor`; returns {quotient, remainder}.
  [[nodiscard]] std::pair<Polynomial, Polynomial> divide(const Polynomial& divisor) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  ComplexVector coeffs_;
};

}  // namespace oscillquad
