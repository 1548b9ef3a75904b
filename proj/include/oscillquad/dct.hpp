#pragma once

#include <span>

#include "oscillquad/types.hpp"

namespace oscillquad {

enum class DctMethod {
  fast,   ///< FFT-backed, O(n log n)
  naive,  ///< direct double sum, O(n^2); kept as a test oracle
};

/// Type-I discrete cosine transform with halved endpoint terms:
///
///   y_m = sum''_{n=0}^{N} cos(m n pi / N) x_n,   N = x.size() - 1,
///
/// where the n = 0 and n = N terms carry a factor 1/2. Requires at least
/// three samples.
[[nodiscard]] ComplexVector dct1_forward(std::span<const Complex> x,
                                         DctMethod method = DctMethod::fast);

/// Inverse of dct1_forward, which is (2 / N) times the forward transform.
[[nodiscard]] ComplexVector dct1_inverse(std::span<const Complex> y,
                                         DctMethod method = DctMethod::fast);

/// Real-valued forward transform, same convention.
[[nodiscard]] std::vector<double> dct1_forward_real(std::span<const double> x,
                                                    DctMethod method = DctMethod::fast);

}  // namespace oscillquad
