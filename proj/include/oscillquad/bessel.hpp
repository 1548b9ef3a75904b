#pragma once

namespace oscillquad {

struct BesselValue {
  double j = 0.0;       ///< J_gamma(x)
  double dj = 0.0;      ///< J_gamma'(x)
};

/// Integer-order Bessel function of the first kind and its derivative.
///
/// Uses the power series for x <= 1, Miller's downward recurrence normalized
/// by J_0 + 2 sum_k J_2k = 1 up to x = 50 (gamma + 1) and the Hankel
/// asymptotic expansion beyond. Requires
/// gamma >= 0 and x > 0; throws std::domain_error otherwise.
[[nodiscard]] BesselValue bessel_eval(int gamma, double x);

/// Same as bessel_eval for any real x, via J_n(-x) = (-1)^n J_n(x).
[[nodiscard]] BesselValue bessel_eval_signed(int gamma, double x);

}  // namespace oscillquad
