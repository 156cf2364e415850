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

// Data-parallel inner loops. Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2 variant. The active table is picked
// once at startup from CPUID; SURFSEG_SIMD=scalar forces the reference path.
//
// The byte-mask and counting kernels are exact, so every backend returns
// identical results. The field kernel sums in a different order per backend
// and agrees only to rounding.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace surfseg::simd {

enum class Backend { scalar, avx2 };

const char* to_string(Backend backend);

struct FieldSum {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct OverlapCounts {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t both = 0;
};

/// Point charges in structure-of-arrays layout.
struct ChargeSet {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> z;
  std::vector<double> q;

  std::size_t size() const { return x.size(); }
  void push_back(double px, double py, double pz, double charge) {
    x.push_back(px);
    y.push_back(py);
    z.push_back(pz);
    q.push_back(charge);
  }
};

struct Kernels {
  Backend backend;

  /// Sum over charges p (charge c) with |x - p|^2 > exclusion_sq of
  /// c (x - p) / |x - p|^power. `power` is an odd integer >= 3.
  FieldSum (*field_sum)(const double* px, const double* py, const double* pz,
                        const double* charge, std::size_t n, double qx, double qy, double qz,
                        double exclusion_sq, int power);

  /// dst[i] = rows[0][i] & rows[1][i] & ... for i < n (bytes holding 0 or 1).
  void (*and_rows)(std::uint8_t* dst, const std::uint8_t* const* rows, std::size_t row_count,
                   std::size_t n);
  /// dst[i] = rows[0][i] | rows[1][i] | ...
  void (*or_rows)(std::uint8_t* dst, const std::uint8_t* const* rows, std::size_t row_count,
                  std::size_t n);

  /// Counts of a != 0, b != 0 and both, over float masks.
  OverlapCounts (*count_overlap)(const float* a, const float* b, std::size_t n);
};

/// The scalar reference table; always available.
const Kernels& scalar_kernels();

/// True when `backend` was compiled in and the running CPU supports it.
bool supported(Backend backend);

/// Table for an explicit backend. Throws std::runtime_error when unsupported.
const Kernels& kernels(Backend backend);

/// The table selected for this process.
const Kernels& active();

/// Charges helper over the active backend.
FieldSum field_sum(const ChargeSet& charges, double qx, double qy, double qz, double exclusion_sq,
                   int power);

}  // namespace surfseg::simd
