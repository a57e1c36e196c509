#include "ftd/kernels.hpp"

#include <bit>

namespace ftd::kernels {

namespace {

void compose_scalar(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = b[a[i]];
}

void subset_image_scalar(const std::uint64_t* in, const std::uint16_t* inv, std::uint64_t* out,
                         std::size_t degree) {
  const std::size_t words = (degree + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t y = 0; y < degree; ++y) {
    const std::uint16_t x = inv[y];
    out[y >> 6] |= ((in[x >> 6] >> (x & 63)) & 1ULL) << (y & 63);
  }
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return c;
}

}  // namespace

const Table& scalar_table() {
  static const Table t{Isa::Scalar, compose_scalar, subset_image_scalar, and_popcount_scalar};
  return t;
}

}  // namespace ftd::kernels
