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

#include <cmath>
#include <numbers>
#include <set>

#include "surfseg/morphology.hpp"
#include "surfseg/phantom.hpp"
#include "surfseg/refine.hpp"

using namespace surfseg;

TEST_CASE("sphere phantom volume") {
  PhantomSpec s;
  const Phantom p = make_phantom(s);
  const double analytic = 4.0 / 3.0 * std::numbers::pi * 512.0;
  CHECK(std::abs(double(count_foreground(p.label)) - analytic) <= 0.03 * analytic);
}

TEST_CASE("noise-free phantom has two intensities") {
  PhantomSpec s;
  s.noise_sigma = 0.0;
  const Phantom p = make_phantom(s);
  const std::set<float> values(p.intensity.values().begin(), p.intensity.values().end());
  CHECK(values == std::set<float>{60.0f, 180.0f});
}

TEST_CASE("phantoms are deterministic") {
  PhantomSpec s;
  s.shape = ShapeKind::ellipsoid;
  s.radii = {9, 6, 5};
  s.seed = 99;
  const Phantom a = make_phantom(s);
  const Phantom b = make_phantom(s);
  CHECK(a.intensity == b.intensity);
  CHECK(a.label == b.label);
  s.seed = 100;
  CHECK_FALSE(make_phantom(s).intensity == a.intensity);
}

TEST_CASE("phantom spec validation") {
  PhantomSpec s;
  s.center = {4, 16, 16};
  CHECK_THROWS_AS(make_phantom(s), InputError);
  s = {};
  s.fg_mean = 10;
  CHECK_THROWS_AS(make_phantom(s), InputError);
  s = {};
  s.radii = {0, 0, 0};
  CHECK_THROWS_AS(make_phantom(s), InputError);
}

TEST_CASE("counter RNG") {
  CHECK(counter_rng::mix(1, 2) == counter_rng::mix(1, 2));
  CHECK(counter_rng::mix(1, 2) != counter_rng::mix(2, 2));
  double sum = 0.0;
  double sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = counter_rng::uniform(5, std::uint64_t(i));
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    const double z = counter_rng::normal(5, std::uint64_t(i));
    sum += z;
    sq += z * z;
  }
  CHECK(std::abs(sum / n) < 0.03);
  CHECK(std::abs(sq / n - 1.0) < 0.05);
}

TEST_CASE("simulated probabilities") {
  PhantomSpec s;
  const Phantom ph = make_phantom(s);
  const ProbabilityVolume p = simulate_prob(ph.label, 1.0, 0.0, 1);
  CHECK(threshold(p, 0.5) == ph.label);
  CHECK(p(16, 16, 16) > 0.99f);
  CHECK(sigmoid_prob(0.0, 1.0) == 0.5);
  CHECK(sigmoid_prob(-10.0, 1.0) > 0.99);

  // Monotone in signed distance without noise.
  const std::vector<double> d = signed_distance(ph.label);
  std::vector<std::size_t> order(d.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return d[a] < d[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) REQUIRE(p[order[i]] <= p[order[i - 1]]);

  const ProbabilityVolume noisy = simulate_prob(ph.label, 1.0, 0.3, 4);
  for (float v : noisy.values()) REQUIRE((v >= 0.0f && v <= 1.0f));
  CHECK(simulate_prob(ph.label, 1.0, 0.3, 4) == noisy);

  CHECK_THROWS_AS(simulate_prob(LabelVolume(ph.label.geometry()), 1.0, 0.0, 1), InputError);
  CHECK_THROWS_AS(simulate_prob(ph.label, 0.0, 0.0, 1), InputError);
}

TEST_CASE("signed distance matches a brute-force scan") {
  PhantomSpec s;
  s.dims = {12, 12, 12};
  s.center = {6, 6, 6};
  s.radii = {3.5, 3.5, 3.5};
  const Phantom ph = make_phantom(s);
  const std::vector<double> d = signed_distance(ph.label);
  const Geometry& g = ph.label.geometry();
  for (std::size_t a = 0; a < g.voxel_count(); a += 7) {
    const auto ia = std::int64_t(a);
    const Vec3 pa = g.voxel_center(ia % 12, (ia / 12) % 12, ia / 144);
    double best = 1e9;
    for (std::size_t b = 0; b < g.voxel_count(); ++b) {
      if (ph.label[b] == ph.label[a]) continue;
      const auto ib = std::int64_t(b);
      best = std::min(best, distance(pa, g.voxel_center(ib % 12, (ib / 12) % 12, ib / 144)));
    }
    const double expect = ph.label[a] != 0.0f ? -(best - 0.5) : best - 0.5;
    REQUIRE(std::abs(d[a] - expect) < 1e-12);
  }
}

TEST_CASE("distractors") {
  PhantomSpec s;
  const Phantom ph = make_phantom(s);
  SUBCASE("removed by refinement") {
    const DistractorResult d =
        add_distractor(ph.intensity, ph.label, {{12.5, 0, 0}, 2.5, 40.0, 10.0, 3});
    CHECK(count_foreground(d.label) > 0);
    LabelVolume both = ph.label;
    for (std::size_t i = 0; i < both.size(); ++i) {
      if (d.label[i] != 0.0f) both.set(i, 1.0f);
    }
    CHECK(count_components(both) == 2);
    const ProbabilityVolume p = simulate_prob(both, 1.0, 0.0, 1);
    const RefineResult r = refine_pipeline(p, threshold(p, 0.5), d.intensity);
    for (std::size_t i = 0; i < both.size(); ++i) {
      if (d.label[i] != 0.0f) REQUIRE(r.mask[i] == 0.0f);
    }
  }
  SUBCASE("zero radius is a no-op") {
    const DistractorResult d = add_distractor(ph.intensity, ph.label, {{12, 0, 0}, 0.0, 40.0});
    CHECK(d.intensity == ph.intensity);
    CHECK(count_foreground(d.label) == 0);
  }
  SUBCASE("overlap is rejected") {
    CHECK_THROWS_AS(add_distractor(ph.intensity, ph.label, {{5, 0, 0}, 3.0, 40.0}), InputError);
    CHECK_THROWS_AS(add_distractor(ph.intensity, ph.label, {{10, 0, 0}, 1.0, 40.0}), InputError);
  }
}
