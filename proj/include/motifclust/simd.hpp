#pragma once

#include <cstddef>
#include <cstdint>

namespace motifclust::simd {

// Data-parallel inner-loop kernels. Scalar reference implementations always
// exist; an AVX2 variant is selected at runtime when the CPU supports it.
// The double kernels are written without FMA or reordered reductions so every
// backend produces bit-identical results for identical inputs.
struct Kernels {
  // y[i] += a * x[i]
  void (*daxpy)(double* y, const double* x, double a, std::size_t n);
  // x[i] *= a
  void (*dscal)(double* x, double a, std::size_t n);
  // #{ i in [0,n) : masks[i] & m != 0 }
  std::size_t (*mask_count_hit)(const uint64_t* masks, std::size_t n, uint64_t m);
  // #{ j in [0,k) : masks[ids[j]] & m != 0 }
  std::size_t (*mask_count_hit_idx)(const uint64_t* masks, const int32_t* ids,
                                    std::size_t k, uint64_t m);
  // #{ j in [0,k) : masks[a_ids[j]] & masks[b_ids[j]] & m != 0 }
  std::size_t (*mask_count_hit_idx2)(const uint64_t* masks, const int32_t* a_ids,
                                     const int32_t* b_ids, std::size_t k, uint64_t m);
  const char* name;
};

// Active backend. Chosen once: MOTIFCLUST_SIMD=scalar|avx2 in the environment
// overrides CPU detection (requesting avx2 on unsupported hardware falls back
// to scalar).
const Kernels& ops();

const Kernels& scalar_kernels();

// Null when the binary lacks the AVX2 translation unit or the CPU lacks AVX2.
const Kernels* avx2_kernels();

}  // namespace motifclust::simd
