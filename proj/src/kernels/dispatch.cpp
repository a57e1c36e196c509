#include "ftd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace ftd::kernels {

#if defined(FTD_HAVE_AVX2)
const Table& avx2_table_impl();
#endif

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "?";
}

const Table* avx2_table() {
#if defined(FTD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return ok ? &avx2_table_impl() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

// 0 = automatic, 1 = scalar, 2 = avx2
std::atomic<int> g_override{0};

const Table& automatic() {
  static const Table* chosen = [] {
    const char* env = std::getenv("FTD_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_table();
    const Table* t = avx2_table();
    return t ? t : &scalar_table();
  }();
  return *chosen;
}

}  // namespace

const Table& active() {
  switch (g_override.load(std::memory_order_relaxed)) {
    case 1: return scalar_table();
    case 2:
      if (const Table* t = avx2_table()) return *t;
      return scalar_table();
    default: return automatic();
  }
}

void set_override(std::optional<Isa> isa) {
  g_override.store(!isa ? 0 : (*isa == Isa::Scalar ? 1 : 2), std::memory_order_relaxed);
}

}  // namespace ftd::kernels
