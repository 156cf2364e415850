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

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kernels_impl.hpp"

namespace surfseg::simd {
namespace {

constexpr Kernels kScalar{Backend::scalar, detail::field_sum_scalar, detail::and_rows_scalar,
                          detail::or_rows_scalar, detail::count_overlap_scalar};

#ifdef SURFSEG_HAVE_AVX2
constexpr Kernels kAvx2{Backend::avx2, detail::field_sum_avx2, detail::and_rows_avx2,
                        detail::or_rows_avx2, detail::count_overlap_avx2};
#endif

const Kernels& select_backend() {
  if (const char* forced = std::getenv("SURFSEG_SIMD")) {
    if (std::string_view(forced) == "scalar") return kScalar;
  }
  if (supported(Backend::avx2)) return kernels(Backend::avx2);
  return kScalar;
}

}  // namespace

const char* to_string(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

const Kernels& scalar_kernels() { return kScalar; }

bool supported(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(SURFSEG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const Kernels& kernels(Backend backend) {
  if (!supported(backend)) {
    throw std::runtime_error(std::string("SIMD backend not available: ") + to_string(backend));
  }
#ifdef SURFSEG_HAVE_AVX2
  if (backend == Backend::avx2) return kAvx2;
#endif
  return kScalar;
}

const Kernels& active() {
  static const Kernels& table = select_backend();
  return table;
}

FieldSum field_sum(const ChargeSet& charges, double qx, double qy, double qz, double exclusion_sq,
                   int power) {
  return active().field_sum(charges.x.data(), charges.y.data(), charges.z.data(), charges.q.data(),
                            charges.size(), qx, qy, qz, exclusion_sq, power);
}

}  // namespace surfseg::simd
