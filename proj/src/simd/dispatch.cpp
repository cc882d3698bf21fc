#include <cstdlib>
#include <string_view>

#include "hilbert/simd/kernels.hpp"
#include "kernels_internal.hpp"

namespace hilbert::simd {

const KernelTable* avx2_kernels() {
#if HILBERT_HAVE_AVX2
  return avx2_kernels_impl();
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if HILBERT_HAVE_NEON
  return neon_kernels_impl();
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& select() {
  if (const char* env = std::getenv("HILBERT_SIMD"); env && std::string_view(env) == "scalar")
    return scalar_kernels();
  if (const auto* t = avx2_kernels()) return *t;
  if (const auto* t = neon_kernels()) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out{&scalar_kernels()};
  if (const auto* t = avx2_kernels()) out.push_back(t);
  if (const auto* t = neon_kernels()) out.push_back(t);
  return out;
}

}  // namespace hilbert::simd
