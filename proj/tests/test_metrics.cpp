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

#include <doctest.h>

#include <vector>

#include "support/testgen.hpp"
#include "surfseg/metrics.hpp"

using namespace surfseg;

namespace {

LabelVolume cube_at(const Geometry& g, std::int64_t x0, std::int64_t edge) {
  LabelVolume m(g);
  for (std::int64_t k = 0; k < edge; ++k)
    for (std::int64_t j = 0; j < edge; ++j)
      for (std::int64_t i = 0; i < edge; ++i) m.set(x0 + i, j, k, 1.0f);
  return m;
}

LabelVolume with_count(const Geometry& g, std::size_t n) {
  LabelVolume m(g);
  for (std::size_t i = 0; i < n; ++i) m.set(i, 1.0f);
  return m;
}

}  // namespace

TEST_CASE("DSC examples") {
  const Geometry g = testgen::cube_geometry(10);
  const LabelVolume a = cube_at(g, 0, 4);
  CHECK(dsc(a, a) == 1.0);
  CHECK(dsc(a, cube_at(g, 5, 4)) == 0.0);
  CHECK(dsc(a, cube_at(g, 2, 4)) == 0.5);
  CHECK_THROWS_AS(dsc(LabelVolume(g), LabelVolume(g)), InputError);
  CHECK_THROWS_AS(dsc(a, LabelVolume(testgen::cube_geometry(9))), InputError);
}

TEST_CASE("RVD examples") {
  const Geometry g = testgen::cube_geometry(10);
  CHECK(rvd(with_count(g, 120), with_count(g, 100)) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(rvd(with_count(g, 100), with_count(g, 100)) == 0.0);
  CHECK(rvd(LabelVolume(g), with_count(g, 100)) == 1.0);
  CHECK_THROWS_AS(rvd(with_count(g, 3), LabelVolume(g)), InputError);
  const EvalResult e = evaluate(with_count(g, 120), with_count(g, 100));
  CHECK(e.vol_seg == 120);
  CHECK(e.vol_ref == 100);
  CHECK(e.dsc == doctest::Approx(200.0 / 220.0));
}

TEST_CASE("paired t-test") {
  const std::vector<double> x = {1, 2, 3, 4, 5};
  const std::vector<double> zero(5, 0.0);
  const TTestResult r = paired_t_test(x, zero);
  CHECK(r.df == 4);
  CHECK(std::abs(r.t - 4.2426) <= 1e-3);
  CHECK(std::abs(r.p - 0.0132) <= 1e-3);

  const TTestResult flipped = paired_t_test(zero, x);
  CHECK(flipped.t == -r.t);
  CHECK(flipped.p == r.p);

  const std::vector<double> sym = {-1, 1, -1, 1};
  const TTestResult s = paired_t_test(sym, std::vector<double>(4, 0.0));
  CHECK(s.t == 0.0);
  CHECK(s.p == 1.0);

  CHECK_THROWS_AS(paired_t_test(x, x), InputError);
  CHECK_THROWS_AS(paired_t_test(x, std::vector<double>(4, 0.0)), InputError);
  CHECK_THROWS_AS(paired_t_test(std::vector<double>{1}, std::vector<double>{0}), InputError);
}

TEST_CASE("p decreases as |t| grows") {
  for (double df : {1.0, 4.0, 30.0}) {
    double prev = 1.0;
    for (double t = 0.25; t <= 8.0; t += 0.25) {
      const double p = student_t_two_sided(t, df);
      REQUIRE(p < prev);
      REQUIRE(student_t_two_sided(-t, df) == p);
      prev = p;
    }
  }
}
