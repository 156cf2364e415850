// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The surfseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2; only reached after a CPUID check in dispatch.cpp.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace surfseg::simd::detail {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

FieldSum field_sum_avx2(const double* px, const double* py, const double* pz,
                        const double* charge, std::size_t n,
                        double qx, double qy, double qz, double exclusion_sq, int power) {
  const __m256d vqx = _mm256_set1_pd(qx);
  const __m256d vqy = _mm256_set1_pd(qy);
  const __m256d vqz = _mm256_set1_pd(qz);
  const __m256d vexcl = _mm256_set1_pd(exclusion_sq);
  const int even_half = (power - 1) / 2;

  __m256d sx = _mm256_setzero_pd();
  __m256d sy = _mm256_setzero_pd();
  __m256d sz = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(vqx, _mm256_loadu_pd(px + i));
    const __m256d dy = _mm256_sub_pd(vqy, _mm256_loadu_pd(py + i));
    const __m256d dz = _mm256_sub_pd(vqz, _mm256_loadu_pd(pz + i));
    const __m256d r2 = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                                     _mm256_mul_pd(dz, dz));
    const __m256d keep = _mm256_cmp_pd(r2, vexcl, _CMP_GT_OQ);
    __m256d denom = _mm256_sqrt_pd(r2);
    for (int e = 0; e < even_half; ++e) denom = _mm256_mul_pd(denom, r2);
    // Excluded lanes may divide by zero; the mask zeroes them before use.
    const __m256d w = _mm256_and_pd(keep, _mm256_div_pd(_mm256_loadu_pd(charge + i), denom));
    sx = _mm256_add_pd(sx, _mm256_mul_pd(dx, w));
    sy = _mm256_add_pd(sy, _mm256_mul_pd(dy, w));
    sz = _mm256_add_pd(sz, _mm256_mul_pd(dz, w));
  }
  const FieldSum tail =
      field_sum_scalar(px + i, py + i, pz + i, charge + i, n - i, qx, qy, qz, exclusion_sq, power);
  return {hsum(sx) + tail.x, hsum(sy) + tail.y, hsum(sz) + tail.z};
}

void and_rows_avx2(std::uint8_t* dst, const std::uint8_t* const* rows, std::size_t row_count,
                   std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i acc = _mm256_set1_epi8(1);
    for (std::size_t r = 0; r < row_count; ++r) {
      acc = _mm256_and_si256(acc,
                             _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows[r] + i)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), acc);
  }
  if (i < n) {
    const std::uint8_t* shifted[16];
    for (std::size_t r = 0; r < row_count; ++r) shifted[r] = rows[r] + i;
    and_rows_scalar(dst + i, shifted, row_count, n - i);
  }
}

void or_rows_avx2(std::uint8_t* dst, const std::uint8_t* const* rows, std::size_t row_count,
                  std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t r = 0; r < row_count; ++r) {
      acc = _mm256_or_si256(acc,
                            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows[r] + i)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), acc);
  }
  if (i < n) {
    const std::uint8_t* shifted[16];
    for (std::size_t r = 0; r < row_count; ++r) shifted[r] = rows[r] + i;
    or_rows_scalar(dst + i, shifted, row_count, n - i);
  }
}

OverlapCounts count_overlap_avx2(const float* a, const float* b, std::size_t n) {
  const __m256 zero = _mm256_setzero_ps();
  OverlapCounts c;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256 ma = _mm256_cmp_ps(_mm256_loadu_ps(a + i), zero, _CMP_NEQ_UQ);
    const __m256 mb = _mm256_cmp_ps(_mm256_loadu_ps(b + i), zero, _CMP_NEQ_UQ);
    c.a += static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_ps(ma)));
    c.b += static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_ps(mb)));
    c.both += static_cast<std::size_t>(
        __builtin_popcount(_mm256_movemask_ps(_mm256_and_ps(ma, mb))));
  }
  const OverlapCounts tail = count_overlap_scalar(a + i, b + i, n - i);
  c.a += tail.a;
  c.b += tail.b;
  c.both += tail.both;
  return c;
}

}  // namespace surfseg::simd::detail
