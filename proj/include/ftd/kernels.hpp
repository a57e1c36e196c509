#pragma once

// Inner loops shared by the permutation and design code. The scalar table is
// the reference; the AVX2 table is selected at runtime when the CPU supports
// it. Setting FTD_KERNELS=scalar in the environment forces the reference.

#include <cstddef>
#include <cstdint>
#include <optional>

namespace ftd::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);

struct Table {
  Isa isa;
  /// out[i] = b[a[i]] for i < n. b must be readable one element past its
  /// last used index (permutation storage keeps a trailing pad for this).
  void (*compose)(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out, std::size_t n);
  /// Image of a point set under a permutation: bit y of out is bit inv[y] of
  /// in, for y < degree. out must hold ceil(degree/64) words.
  void (*subset_image)(const std::uint64_t* in, const std::uint16_t* inv, std::uint64_t* out,
                       std::size_t degree);
  /// popcount(a & b) over the given number of 64-bit words.
  std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
};

const Table& scalar_table();
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const Table* avx2_table();

/// The table in use for this process.
const Table& active();

/// Forces a table (tests use this to compare variants); nullopt restores
/// the automatic choice.
void set_override(std::optional<Isa> isa);

}  // namespace ftd::kernels
