#pragma once

#include <span>

#include "oscillquad/banded_matrix.hpp"

namespace oscillquad {

/// Interleaving permutation for an M x M array of nu x nu banded blocks.
///
/// Position i = M l + k of the interleaved ordering (k = 0..M-1,
/// l = 0..nu-1) maps to position k nu + l of the block-major ordering. In
/// the usual one-based notation this is p(M l + k) = (k - 1) nu + l + 1.
class BlockPermutation {
 public:
  BlockPermutation(std::size_t m, std::size_t nu);

  [[nodiscard]] std::size_t blocks() const noexcept { return m_; }
  [[nodiscard]] std::size_t block_size() const noexcept { return nu_; }
  [[nodiscard]] std::size_t size() const noexcept { return m_ * nu_; }

  /// Interleaved index -> block-major index (zero based).
  [[nodiscard]] std::size_t operator()(std::size_t i) const noexcept {
    return (i % m_) * nu_ + i / m_;
  }
  /// Block-major index -> interleaved index.
  [[nodiscard]] std::size_t inverse(std::size_t j) const noexcept {
    return (j % nu_) * m_ + j / nu_;
  }

  /// out[i] = x[p(i)]
  [[nodiscard]] ComplexVector to_interleaved(std::span<const Complex> block_major) const;
  /// Inverse of to_interleaved.
  [[nodiscard]] ComplexVector to_block_major(std::span<const Complex> interleaved) const;

 private:
  std::size_t m_;
  std::size_t nu_;
};

[[nodiscard]] inline BlockPermutation hockney_permutation(std::size_t m, std::size_t nu) {
  return BlockPermutation(m, nu);
}

/// Row-major M x M array of equally sized square blocks.
using BlockArray = std::vector<std::vector<BandedMatrix>>;

/// Assembles D with D_{i,j} = Btt_{p(i), p(j)}, where Btt is the block matrix
/// made of `blocks`. With half-bandwidth h per block the result has
/// half-bandwidth M h + M - 1.
[[nodiscard]] BandedMatrix reorder_block_banded(const BlockArray& blocks,
                                                const BlockPermutation& perm);

}  // namespace oscillquad
