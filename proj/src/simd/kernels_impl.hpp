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

#pragma once

#include "surfseg/simd/kernels.hpp"

namespace surfseg::simd::detail {

FieldSum field_sum_scalar(const double* px, const double* py, const double* pz,
                          const double* charge, std::size_t n,
                          double qx, double qy, double qz, double exclusion_sq, int power);
void and_rows_scalar(std::uint8_t* dst, const std::uint8_t* const* rows, std::size_t row_count,
                     std::size_t n);
void or_rows_scalar(std::uint8_t* dst, const std::uint8_t* const* rows, std::size_t row_count,
                    std::size_t n);
OverlapCounts count_overlap_scalar(const float* a, const float* b, std::size_t n);

#ifdef SURFSEG_HAVE_AVX2
FieldSum field_sum_avx2(const double* px, const double* py, const double* pz,
                        const double* charge, std::size_t n,
                        double qx, double qy, double qz, double exclusion_sq, int power);
void and_rows_avx2(std::uint8_t* dst, const std::uint8_t* const* rows, std::size_t row_count,
                   std::size_t n);
void or_rows_avx2(std::uint8_t* dst, const std::uint8_t* const* rows, std::size_t row_count,
                  std::size_t n);
OverlapCounts count_overlap_avx2(const float* a, const float* b, std::size_t n);
#endif

}  // namespace surfseg::simd::detail
