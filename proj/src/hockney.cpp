#include "oscillquad/hockney.hpp"

#include <algorithm>

namespace oscillquad {

BlockPermutation::BlockPermutation(std::size_t m, std::size_t nu) : m_(m), nu_(nu) {
  if (m < 1 || nu < 1) throw std::invalid_argument("BlockPermutation: need M >= 1 and nu >= 1");
}

ComplexVector BlockPermutation::to_interleaved(std::span<const Complex> block_major) const {
  if (block_major.size() != size()) throw std::invalid_argument("to_interleaved: size mismatch");
  ComplexVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = block_major[(*this)(i)];
  return out;
}

ComplexVector BlockPermutation::to_block_major(std::span<const Complex> interleaved) const {
  if (interleaved.size() != size()) throw std::invalid_argument("to_block_major: size mismatch");
  ComplexVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out[(*this)(i)] = interleaved[i];
  return out;
}

BandedMatrix reorder_block_banded(const BlockArray& blocks, const BlockPermutation& perm) {
  const std::size_t m = perm.blocks();
  const std::size_t nu = perm.block_size();
  if (blocks.size() != m) throw std::invalid_argument("reorder_block_banded: wrong block count");
  int lower = 0, upper = 0;
  for (const auto& row : blocks) {
    if (row.size() != m) throw std::invalid_argument("reorder_block_banded: wrong block count");
    for (const auto& b : row) {
      if (b.size() != nu)
        throw std::invalid_argument("reorder_block_banded: inconsistent block sizes");
      lower = std::max(lower, b.lower_bw());
      upper = std::max(upper, b.upper_bw());
    }
  }
  const int mi = static_cast<int>(m);
  BandedMatrix d(m * nu, mi * lower + mi - 1, mi * upper + mi - 1);
  for (std::size_t bi = 0; bi < m; ++bi) {
    for (std::size_t bj = 0; bj < m; ++bj) {
      const BandedMatrix& b = blocks[bi][bj];
      for (std::size_t c = 0; c < nu; ++c) {
        const std::size_t lo = c > static_cast<std::size_t>(b.upper_bw()) ? c - b.upper_bw() : 0;
        const std::size_t hi = std::min(nu - 1, c + static_cast<std::size_t>(b.lower_bw()));
        for (std::size_t r = lo; r <= hi; ++r) {
          const Complex v = b.ref(r, c);
          if (v == Complex{0.0}) continue;
          d.ref(perm.inverse(bi * nu + r), perm.inverse(bj * nu + c)) = v;
        }
      }
    }
  }
  return d;
}

}  // namespace oscillquad
