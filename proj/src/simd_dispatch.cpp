#include "motifclust/simd.hpp"

#include <cstdlib>
#include <cstring>

namespace motifclust::simd {

#ifdef MOTIFCLUST_AVX2_BUILT
const Kernels* avx2_kernels_impl();
#endif

const Kernels* avx2_kernels() {
#ifdef MOTIFCLUST_AVX2_BUILT
  if (__builtin_cpu_supports("avx2")) return avx2_kernels_impl();
#endif
  return nullptr;
}

namespace {

const Kernels& select() {
  const char* env = std::getenv("MOTIFCLUST_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_kernels();
  const Kernels* avx2 = avx2_kernels();
  if (env != nullptr && std::strcmp(env, "avx2") == 0)
    return avx2 != nullptr ? *avx2 : scalar_kernels();
  return avx2 != nullptr ? *avx2 : scalar_kernels();
}

}  // namespace

const Kernels& ops() {
  static const Kernels& k = select();
  return k;
}

}  // namespace motifclust::simd
