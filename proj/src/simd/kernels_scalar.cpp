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

#include <cmath>

#include "kernels_impl.hpp"

namespace surfseg::simd::detail {

FieldSum field_sum_scalar(const double* px, const double* py, const double* pz,
                          const double* charge, std::size_t n,
                          double qx, double qy, double qz, double exclusion_sq, int power) {
  FieldSum sum;
  const int even_half = (power - 1) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = qx - px[i];
    const double dy = qy - py[i];
    const double dz = qz - pz[i];
    const double r2 = dx * dx + dy * dy + dz * dz;
    if (!(r2 > exclusion_sq)) continue;
    double denom = std::sqrt(r2);
    for (int e = 0; e < even_half; ++e) denom *= r2;
    const double w = charge[i] / denom;
    sum.x += dx * w;
    sum.y += dy * w;
    sum.z += dz * w;
  }
  return sum;
}

void and_rows_scalar(std::uint8_t* dst, const std::uint8_t* const* rows, std::size_t row_count,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t v = 1;
    for (std::size_t r = 0; r < row_count; ++r) v &= rows[r][i];
    dst[i] = v;
  }
}

void or_rows_scalar(std::uint8_t* dst, const std::uint8_t* const* rows, std::size_t row_count,
                    std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t v = 0;
    for (std::size_t r = 0; r < row_count; ++r) v |= rows[r][i];
    dst[i] = v;
  }
}

OverlapCounts count_overlap_scalar(const float* a, const float* b, std::size_t n) {
  OverlapCounts c;
  for (std::size_t i = 0; i < n; ++i) {
    const bool in_a = a[i] != 0.0f;
    const bool in_b = b[i] != 0.0f;
    c.a += in_a;
    c.b += in_b;
    c.both += in_a && in_b;
  }
  return c;
}

}  // namespace surfseg::simd::detail
