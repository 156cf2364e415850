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

// Randomized properties checked against naive oracles.

#include <doctest.h>

#include <array>

#include "support/oracles.hpp"
#include "support/testgen.hpp"
#include "surfseg/costs.hpp"
#include "surfseg/flow.hpp"
#include "surfseg/metrics.hpp"
#include "surfseg/morphology.hpp"
#include "surfseg/refine.hpp"
#include "surfseg/surface_solution.hpp"

using namespace surfseg;

namespace {

bool subset(const LabelVolume& a, const LabelVolume& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0.0f && b[i] == 0.0f) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("opening and closing match the oracle and are idempotent") {
  testgen::Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t n = rng.integer(3, 12);
    const LabelVolume m = rng.coin(0.5) ? testgen::blobby_mask(rng, testgen::cube_geometry(n))
                                        : testgen::random_mask(rng, testgen::cube_geometry(n),
                                                               rng.uniform(0.2, 0.8));
    const int it = static_cast<int>(rng.integer(0, 3));
    const LabelVolume o = open3d(m, it);
    const LabelVolume c = close3d(m, it);
    REQUIRE(o == oracle::open_ref(m, it));
    REQUIRE(c == oracle::close_ref(m, it));
    REQUIRE(subset(o, m));
    REQUIRE(subset(m, c));
    REQUIRE(open3d(o, it) == o);
    REQUIRE(close3d(c, it) == c);
  }
}

TEST_CASE("largest component is a single 26-connected piece of the input") {
  testgen::Rng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const LabelVolume m = testgen::random_mask(rng, testgen::cube_geometry(rng.integer(2, 10)),
                                               rng.uniform(0.05, 0.4));
    const LabelVolume l = largest_component(m);
    REQUIRE(subset(l, m));
    if (count_foreground(m) == 0) {
      REQUIRE(count_foreground(l) == 0);
      continue;
    }
    REQUIRE(count_components(l) == 1);
    // Maximal: no input voxel outside l touches l.
    const auto& d = m.dims();
    for (std::int64_t k = 0; k < d[2]; ++k)
      for (std::int64_t j = 0; j < d[1]; ++j)
        for (std::int64_t i = 0; i < d[0]; ++i) {
          if (m(i, j, k) == 0.0f || l(i, j, k) != 0.0f) continue;
          for (int dk = -1; dk <= 1; ++dk)
            for (int dj = -1; dj <= 1; ++dj)
              for (int di = -1; di <= 1; ++di) {
                const std::int64_t a = i + di, b = j + dj, c = k + dk;
                if (a < 0 || b < 0 || c < 0 || a >= d[0] || b >= d[1] || c >= d[2]) continue;
                REQUIRE(l(a, b, c) == 0.0f);
              }
        }
    // No other component is larger.
    const Components comps = label_components(m);
    for (std::size_t s : comps.sizes) REQUIRE(s <= count_foreground(l));
  }
}

TEST_CASE("suppression only removes") {
  testgen::Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Geometry g = testgen::cube_geometry(rng.integer(4, 10));
    const ProbabilityVolume p = testgen::random_prob(rng, g);
    const LabelVolume seg = threshold(p, rng.uniform(0.2, 0.6));
    if (count_foreground(seg) < 8) continue;
    ScalarVolume img(g);
    const double gap = rng.uniform(0.0, 100.0);
    for (std::size_t i = 0; i < img.size(); ++i) {
      img.set(i, static_cast<float>((rng.coin(0.5) ? 100.0 + gap : 100.0) + 5.0 * rng.normal()));
    }
    const SuppressResult r = gmm_suppress(p, seg, img);
    for (std::size_t i = 0; i < p.size(); ++i) {
      REQUIRE(r.prob[i] <= p[i]);
      REQUIRE((r.prob[i] == p[i] || r.prob[i] == 0.0f));
    }
    REQUIRE(subset(r.seg, seg));
    REQUIRE(r.report.voxels_zeroed == count_foreground(seg) - count_foreground(r.seg));
  }
}

TEST_CASE("graph search equals brute force") {
  testgen::Rng rng(24);
  for (int trial = 0; trial < 150; ++trial) {
    const auto K = static_cast<std::size_t>(rng.integer(1, 5));
    const auto L = static_cast<std::size_t>(rng.integer(2, 6));
    const int delta = static_cast<int>(rng.integer(0, 2));
    const ColumnGraph g = testgen::random_column_graph(rng, K, L, delta, rng.coin(0.5));
    const SurfaceSolution a = solve_surface(g);
    const SurfaceSolution b = brute_force_surface(g);
    REQUIRE(a.boundary_index == b.boundary_index);
    REQUIRE(std::abs(a.total_cost - b.total_cost) < 1e-9);
    check_smoothness(a, g);
  }
}

TEST_CASE("adding a constant to one column leaves the surface unchanged") {
  testgen::Rng rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    ColumnGraph g = testgen::random_column_graph(rng, static_cast<std::size_t>(rng.integer(2, 6)),
                                                 static_cast<std::size_t>(rng.integer(3, 8)),
                                                 static_cast<int>(rng.integer(1, 2)), true);
    const SurfaceSolution before = solve_surface(g);
    const std::size_t k =
        static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(g.columns) - 1));
    const double shift = static_cast<double>(rng.integer(-500, 500)) * 1e-3;
    for (std::size_t j = 0; j < g.length; ++j) g.costs[k * g.length + j] += shift;
    const SurfaceSolution after = solve_surface(g);
    REQUIRE(after.boundary_index == before.boundary_index);
    REQUIRE(std::abs(after.total_cost - before.total_cost - shift) < 1e-9);
  }
}

TEST_CASE("eq1_column matches the direct sum") {
  testgen::Rng rng(26);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> p(static_cast<std::size_t>(rng.integer(1, 80)));
    for (double& v : p) v = rng.uniform();
    const std::vector<double> c = eq1_column(p);
    REQUIRE(c.size() == p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
      REQUIRE(std::abs(c[j] - oracle::eq1_direct(p, j + 1)) <= 1e-9);
    }
  }
}

TEST_CASE("max flow equals the exhaustive min cut") {
  testgen::Rng rng(27);
  for (int trial = 0; trial < 200; ++trial) {
    const FlowNetwork net = testgen::random_flow_network(rng, 8, 20);
    const MaxFlowResult r = max_flow(net);
    REQUIRE(r.flow == oracle::min_cut_exhaustive(net));
    // The reported source side is a minimum cut.
    std::int64_t cut = 0;
    for (const FlowArc& a : net.arcs) {
      if (r.source_side[a.from] && !r.source_side[a.to]) cut += a.capacity;
    }
    REQUIRE(cut == r.flow);
    REQUIRE(r.source_side[net.source]);
    REQUIRE_FALSE(r.source_side[net.sink]);
  }
}

TEST_CASE("DSC is symmetric and bounded") {
  testgen::Rng rng(28);
  for (int trial = 0; trial < 50; ++trial) {
    const Geometry g = testgen::cube_geometry(rng.integer(2, 9));
    const LabelVolume a = testgen::random_mask(rng, g, rng.uniform(0.1, 0.9));
    const LabelVolume b = testgen::random_mask(rng, g, rng.uniform(0.1, 0.9));
    if (count_foreground(a) + count_foreground(b) == 0) continue;
    const double ab = dsc(a, b);
    REQUIRE(ab == dsc(b, a));
    REQUIRE((ab >= 0.0 && ab <= 1.0));
    if (count_foreground(a) > 0) REQUIRE(dsc(a, a) == 1.0);
  }
}
