// Compiled with -mavx2; only reached after a runtime CPU check.

#include "ftd/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace ftd::kernels {

namespace {

void compose_avx2(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out, std::size_t n) {
  const __m256i lo16 = _mm256_set1_epi32(0xFFFF);
  const int* base = reinterpret_cast<const int*>(b);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i i0 = _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
    const __m256i i1 = _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i + 8)));
    // 32-bit gathers at byte offset 2*idx pick up b[idx] in the low half.
    __m256i g0 = _mm256_and_si256(_mm256_i32gather_epi32(base, i0, 2), lo16);
    __m256i g1 = _mm256_and_si256(_mm256_i32gather_epi32(base, i1, 2), lo16);
    __m256i packed = _mm256_packus_epi32(g0, g1);
    packed = _mm256_permute4x64_epi64(packed, 0xD8);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), packed);
  }
  for (; i < n; ++i) out[i] = b[a[i]];
}

void subset_image_avx2(const std::uint64_t* in, const std::uint16_t* inv, std::uint64_t* out,
                       std::size_t degree) {
  const int* words32 = reinterpret_cast<const int*>(in);
  const __m256i low5 = _mm256_set1_epi32(31);
  const std::size_t nwords = (degree + 63) / 64;
  for (std::size_t w = 0; w < nwords; ++w) out[w] = 0;
  std::size_t y = 0;
  for (; y + 8 <= degree; y += 8) {
    const __m256i idx = _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(inv + y)));
    const __m256i word = _mm256_i32gather_epi32(words32, _mm256_srli_epi32(idx, 5), 4);
    const __m256i bit = _mm256_srlv_epi32(word, _mm256_and_si256(idx, low5));
    const __m256i top = _mm256_slli_epi32(bit, 31);
    const std::uint64_t mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(top)));
    out[y >> 6] |= mask << (y & 63);
  }
  for (; y < degree; ++y) {
    const std::uint16_t x = inv[y];
    out[y >> 6] |= ((in[x >> 6] >> (x & 63)) & 1ULL) << (y & 63);
  }
}

std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3,
                                       1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low4 = _mm256_set1_epi8(0x0F);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i x = _mm256_and_si256(va, vb);
    const __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(x, low4));
    const __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(x, 4), low4));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256()));
  }
  std::uint64_t c = static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
                    static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
                    static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
                    static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
  for (; i < words; ++i) c += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return c;
}

}  // namespace

const Table& avx2_table_impl() {
  static const Table t{Isa::Avx2, compose_avx2, subset_image_avx2, and_popcount_avx2};
  return t;
}

}  // namespace ftd::kernels
