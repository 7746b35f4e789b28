#include "motifclust/simd.hpp"

#ifdef MOTIFCLUST_AVX2_BUILT

#include <immintrin.h>

namespace motifclust::simd {
namespace {

// Deliberately mul-then-add (no FMA): keeps results bit-identical to the
// scalar reference, which is compiled with -ffp-contract=off.
void daxpy_avx2(double* y, const double* x, double a, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yv = _mm256_loadu_pd(y + i);
    __m256d xv = _mm256_loadu_pd(x + i);
    yv = _mm256_add_pd(yv, _mm256_mul_pd(av, xv));
    _mm256_storeu_pd(y + i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void dscal_avx2(double* x, double a, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

std::size_t mask_count_hit_avx2(const uint64_t* masks, std::size_t n, uint64_t m) {
  const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
    __m256i hit = _mm256_cmpeq_epi64(_mm256_and_si256(v, mv), zero);
    // lanes equal to zero have all bits set; count the others
    int misses = _mm256_movemask_pd(_mm256_castsi256_pd(hit));
    c += 4 - static_cast<std::size_t>(__builtin_popcount(misses & 0xF));
  }
  for (; i < n; ++i) c += (masks[i] & m) != 0;
  return c;
}

std::size_t mask_count_hit_idx_avx2(const uint64_t* masks, const int32_t* ids,
                                    std::size_t k, uint64_t m) {
  const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t c = 0;
  std::size_t j = 0;
  for (; j + 4 <= k; j += 4) {
    __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ids + j));
    __m256i v = _mm256_i32gather_epi64(reinterpret_cast<const long long*>(masks), idx, 8);
    __m256i hit = _mm256_cmpeq_epi64(_mm256_and_si256(v, mv), zero);
    int misses = _mm256_movemask_pd(_mm256_castsi256_pd(hit));
    c += 4 - static_cast<std::size_t>(__builtin_popcount(misses & 0xF));
  }
  for (; j < k; ++j) c += (masks[ids[j]] & m) != 0;
  return c;
}

std::size_t mask_count_hit_idx2_avx2(const uint64_t* masks, const int32_t* a_ids,
                                     const int32_t* b_ids, std::size_t k, uint64_t m) {
  const __m256i mv = _mm256_set1_epi64x(static_cast<long long>(m));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t c = 0;
  std::size_t j = 0;
  for (; j + 4 <= k; j += 4) {
    __m128i ia = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a_ids + j));
    __m128i ib = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b_ids + j));
    __m256i va = _mm256_i32gather_epi64(reinterpret_cast<const long long*>(masks), ia, 8);
    __m256i vb = _mm256_i32gather_epi64(reinterpret_cast<const long long*>(masks), ib, 8);
    __m256i both = _mm256_and_si256(_mm256_and_si256(va, vb), mv);
    __m256i hit = _mm256_cmpeq_epi64(both, zero);
    int misses = _mm256_movemask_pd(_mm256_castsi256_pd(hit));
    c += 4 - static_cast<std::size_t>(__builtin_popcount(misses & 0xF));
  }
  for (; j < k; ++j) c += (masks[a_ids[j]] & masks[b_ids[j]] & m) != 0;
  return c;
}

}  // namespace

const Kernels* avx2_kernels_impl() {
  static const Kernels k = {daxpy_avx2, dscal_avx2, mask_count_hit_avx2,
                            mask_count_hit_idx_avx2, mask_count_hit_idx2_avx2, "avx2"};
  return &k;
}

}  // namespace motifclust::simd

#endif  // MOTIFCLUST_AVX2_BUILT
