#include "motifclust/simd.hpp"

namespace motifclust::simd {
namespace {

void daxpy_scalar(double* y, const double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void dscal_scalar(double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

std::size_t mask_count_hit_scalar(const uint64_t* masks, std::size_t n, uint64_t m) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += (masks[i] & m) != 0;
  return c;
}

std::size_t mask_count_hit_idx_scalar(const uint64_t* masks, const int32_t* ids,
                                      std::size_t k, uint64_t m) {
  std::size_t c = 0;
  for (std::size_t j = 0; j < k; ++j) c += (masks[ids[j]] & m) != 0;
  return c;
}

std::size_t mask_count_hit_idx2_scalar(const uint64_t* masks, const int32_t* a_ids,
                                       const int32_t* b_ids, std::size_t k, uint64_t m) {
  std::size_t c = 0;
  for (std::size_t j = 0; j < k; ++j) c += (masks[a_ids[j]] & masks[b_ids[j]] & m) != 0;
  return c;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {daxpy_scalar, dscal_scalar, mask_count_hit_scalar,
                            mask_count_hit_idx_scalar, mask_count_hit_idx2_scalar, "scalar"};
  return k;
}

}  // namespace motifclust::simd
