#include <doctest.h>

#include <cstring>
#include <numeric>
#include <vector>

#include "motifclust/rng.hpp"
#include "motifclust/simd.hpp"

using namespace motifclust;

TEST_CASE("active backend is wired up") {
  const auto& k = simd::ops();
  CHECK(k.name != nullptr);
  CHECK((std::strcmp(k.name, "scalar") == 0 || std::strcmp(k.name, "avx2") == 0));
  // trivial smoke
  double y[3] = {1, 2, 3};
  const double x[3] = {1, 1, 1};
  k.daxpy(y, x, 2.0, 3);
  CHECK(y[0] == 3.0);
  CHECK(y[2] == 5.0);
}

TEST_CASE("scalar reference kernels") {
  const auto& k = simd::scalar_kernels();
  std::vector<double> y = {1.0, -2.0, 0.5};
  const std::vector<double> x = {2.0, 4.0, -1.0};
  k.daxpy(y.data(), x.data(), 0.5, y.size());
  CHECK(y == std::vector<double>{2.0, 0.0, 0.0});
  k.dscal(y.data(), -2.0, y.size());
  CHECK(y == std::vector<double>{-4.0, -0.0, -0.0});

  const std::vector<uint64_t> masks = {0b01, 0b10, 0b11, 0, 0b100};
  CHECK(k.mask_count_hit(masks.data(), masks.size(), 0b01) == 2);
  CHECK(k.mask_count_hit(masks.data(), masks.size(), 0b111) == 4);
  CHECK(k.mask_count_hit(masks.data(), masks.size(), 0) == 0);

  const std::vector<int32_t> ids = {4, 0, 0, 2};
  CHECK(k.mask_count_hit_idx(masks.data(), ids.data(), ids.size(), 0b01) == 3);

  const std::vector<int32_t> a = {0, 1, 2};
  const std::vector<int32_t> b = {2, 2, 4};
  // pairs: (01&11)=01, (10&11)=10, (11&100)=0
  CHECK(k.mask_count_hit_idx2(masks.data(), a.data(), b.data(), 3, 0b11) == 2);
  CHECK(k.mask_count_hit_idx2(masks.data(), a.data(), b.data(), 3, 0b10) == 1);
}

TEST_CASE("avx2 kernels match scalar bit for bit") {
  const simd::Kernels* av = simd::avx2_kernels();
  if (av == nullptr) {
    MESSAGE("AVX2 backend unavailable on this host; equivalence not exercised");
    return;
  }
  const auto& sc = simd::scalar_kernels();
  Rng rng(20260817);

  for (std::size_t len = 0; len <= 33; ++len) {
    std::vector<double> x(len), y1(len), y2(len);
    for (std::size_t i = 0; i < len; ++i) {
      x[i] = rng.unit() * 8.0 - 4.0;
      y1[i] = rng.unit() * 8.0 - 4.0;
    }
    y2 = y1;
    const double a = rng.unit() * 4.0 - 2.0;
    sc.daxpy(y1.data(), x.data(), a, len);
    av->daxpy(y2.data(), x.data(), a, len);
    CHECK(std::memcmp(y1.data(), y2.data(), len * sizeof(double)) == 0);

    sc.dscal(y1.data(), a, len);
    av->dscal(y2.data(), a, len);
    CHECK(std::memcmp(y1.data(), y2.data(), len * sizeof(double)) == 0);

    std::vector<uint64_t> masks(len);
    for (auto& m : masks) m = rng.below(4) == 0 ? 0 : rng.next() & 0xFF;
    const uint64_t probe = rng.next() & 0xFF;
    CHECK(sc.mask_count_hit(masks.data(), len, probe) ==
          av->mask_count_hit(masks.data(), len, probe));

    if (len > 0) {
      std::vector<int32_t> ids(2 * len), ids2(2 * len);
      for (std::size_t j = 0; j < ids.size(); ++j) {
        ids[j] = static_cast<int32_t>(rng.below(len));
        ids2[j] = static_cast<int32_t>(rng.below(len));
      }
      CHECK(sc.mask_count_hit_idx(masks.data(), ids.data(), ids.size(), probe) ==
            av->mask_count_hit_idx(masks.data(), ids.data(), ids.size(), probe));
      CHECK(sc.mask_count_hit_idx2(masks.data(), ids.data(), ids2.data(), ids.size(), probe) ==
            av->mask_count_hit_idx2(masks.data(), ids.data(), ids2.data(), ids.size(), probe));
    }
  }
}

TEST_CASE("count kernels against a naive loop on larger blocks") {
  const auto& k = simd::ops();
  Rng rng(99);
  std::vector<uint64_t> masks(257);
  for (auto& m : masks) m = rng.next() & 0x3F;
  const uint64_t probe = 0x21;
  std::size_t naive = 0;
  for (uint64_t m : masks) naive += (m & probe) != 0;
  CHECK(k.mask_count_hit(masks.data(), masks.size(), probe) == naive);

  std::vector<int32_t> a(401), b(401);
  for (std::size_t j = 0; j < a.size(); ++j) {
    a[j] = static_cast<int32_t>(rng.below(masks.size()));
    b[j] = static_cast<int32_t>(rng.below(masks.size()));
  }
  std::size_t naive2 = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    naive2 += (masks[static_cast<std::size_t>(a[j])] & masks[static_cast<std::size_t>(b[j])] &
               probe) != 0;
  CHECK(k.mask_count_hit_idx2(masks.data(), a.data(), b.data(), a.size(), probe) == naive2);
}
