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

#include <cstddef>
#include <span>

#include "surfseg/volume.hpp"

namespace surfseg {

struct EvalResult {
  double dsc = 0.0;
  double rvd = 0.0;
  std::size_t vol_seg = 0;
  std::size_t vol_ref = 0;
};

/// 2|A n B| / (|A| + |B|). Throws when both are empty.
double dsc(const LabelVolume& a, const LabelVolume& b);

/// |V_seg - V_ref| / V_ref. Throws on an empty reference.
double rvd(const LabelVolume& seg, const LabelVolume& ref);

EvalResult evaluate(const LabelVolume& seg, const LabelVolume& ref);

struct TTestResult {
  double t = 0.0;
  /// Two-sided.
  double p = 1.0;
  int df = 0;
};

/// Paired t-test on x - y.
TTestResult paired_t_test(std::span<const double> x, std::span<const double> y);

/// Two-sided Student-t tail probability P(|T| >= |t|) with `df` degrees of
/// freedom, I_{df/(df+t^2)}(df/2, 1/2).
double student_t_two_sided(double t, double df);

}  // namespace surfseg
