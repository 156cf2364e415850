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

#include "surfseg/metrics.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "surfseg/simd/kernels.hpp"

namespace surfseg {
namespace {

simd::OverlapCounts overlap(const LabelVolume& a, const LabelVolume& b) {
  require_same_geometry(a.geometry(), b.geometry(), "metrics");
  return simd::active().count_overlap(a.values().data(), b.values().data(), a.size());
}

}  // namespace

double dsc(const LabelVolume& a, const LabelVolume& b) {
  const simd::OverlapCounts c = overlap(a, b);
  if (c.a + c.b == 0) throw InputError("dsc undefined: both masks are empty");
  return 2.0 * static_cast<double>(c.both) / static_cast<double>(c.a + c.b);
}

double rvd(const LabelVolume& seg, const LabelVolume& ref) {
  require_same_geometry(seg.geometry(), ref.geometry(), "metrics");
  const double vs = static_cast<double>(count_foreground(seg));
  const double vr = static_cast<double>(count_foreground(ref));
  if (vr == 0.0) throw InputError("rvd undefined: reference mask is empty");
  return std::abs(vs - vr) / vr;
}

EvalResult evaluate(const LabelVolume& seg, const LabelVolume& ref) {
  const simd::OverlapCounts c = overlap(seg, ref);
  if (c.b == 0) throw InputError("rvd undefined: reference mask is empty");
  EvalResult r;
  r.vol_seg = c.a;
  r.vol_ref = c.b;
  r.dsc = 2.0 * static_cast<double>(c.both) / static_cast<double>(c.a + c.b);
  r.rvd = std::abs(static_cast<double>(c.a) - static_cast<double>(c.b)) /
          static_cast<double>(c.b);
  return r;
}

double student_t_two_sided(double t, double df) {
  if (!(df > 0.0)) throw InputError("degrees of freedom must be > 0");
  if (std::isinf(t)) return 0.0;
  return boost::math::ibeta(0.5 * df, 0.5, df / (df + t * t));
}

TTestResult paired_t_test(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InputError("paired t-test needs equal-length samples");
  const std::size_t n = x.size();
  if (n < 2) throw InputError("paired t-test needs at least 2 pairs");
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += x[i] - y[i];
  mean /= static_cast<double>(n);
  double ss = 0.0;
  bool all_same = true;
  const double d0 = x[0] - y[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - y[i];
    all_same = all_same && d == d0;
    ss += (d - mean) * (d - mean);
  }
  if (all_same || ss == 0.0) throw InputError("paired t-test: differences have zero variance");
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  TTestResult r;
  r.df = static_cast<int>(n - 1);
  r.t = mean / (sd / std::sqrt(static_cast<double>(n)));
  r.p = student_t_two_sided(r.t, r.df);
  return r;
}

}  // namespace surfseg
