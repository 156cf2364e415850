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

// Hand-rolled generators for property tests. Independent of the library's
// counter RNG so test data never shares a stream with the code under test.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "surfseg/costs.hpp"
#include "surfseg/flow.hpp"
#include "surfseg/volume.hpp"

namespace testgen {

/// xorshift64*.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x2545f4914f6cdd1dULL) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dULL;
  }
  /// [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Inclusive range.
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(double p_true) { return uniform() < p_true; }
  double normal() {
    // Marsaglia polar method.
    while (true) {
      const double u = uniform(-1.0, 1.0);
      const double v = uniform(-1.0, 1.0);
      const double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }

 private:
  std::uint64_t state_;
};

inline surfseg::Geometry cube_geometry(std::int64_t n) {
  return {{n, n, n}, {1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}};
}

/// Independent Bernoulli voxels.
inline surfseg::LabelVolume random_mask(Rng& rng, const surfseg::Geometry& g, double density) {
  surfseg::LabelVolume m(g);
  for (std::size_t i = 0; i < m.size(); ++i) m.set(i, rng.coin(density) ? 1.0f : 0.0f);
  return m;
}

/// Union of a few random boxes plus salt noise; closer to real masks than
/// pure noise.
inline surfseg::LabelVolume blobby_mask(Rng& rng, const surfseg::Geometry& g) {
  surfseg::LabelVolume m(g);
  const auto& d = g.dims;
  const int boxes = static_cast<int>(rng.integer(1, 4));
  for (int b = 0; b < boxes; ++b) {
    std::int64_t lo[3];
    std::int64_t hi[3];
    for (int a = 0; a < 3; ++a) {
      lo[a] = rng.integer(0, d[a] - 1);
      hi[a] = std::min(d[a] - 1, lo[a] + rng.integer(1, d[a] / 2));
    }
    for (std::int64_t k = lo[2]; k <= hi[2]; ++k)
      for (std::int64_t j = lo[1]; j <= hi[1]; ++j)
        for (std::int64_t i = lo[0]; i <= hi[0]; ++i) m.set(i, j, k, 1.0f);
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (rng.coin(0.05)) m.set(i, m[i] != 0.0f ? 0.0f : 1.0f);
  }
  return m;
}

inline surfseg::ScalarVolume random_scalar(Rng& rng, const surfseg::Geometry& g, double lo,
                                           double hi) {
  surfseg::ScalarVolume v(g);
  for (std::size_t i = 0; i < v.size(); ++i) v.set(i, static_cast<float>(rng.uniform(lo, hi)));
  return v;
}

inline surfseg::ProbabilityVolume random_prob(Rng& rng, const surfseg::Geometry& g) {
  surfseg::ProbabilityVolume v(g);
  for (std::size_t i = 0; i < v.size(); ++i) v.set(i, static_cast<float>(rng.uniform()));
  return v;
}

/// Cost drawn uniformly from the 1e-6 grid in [-1, 1].
inline double grid_cost(Rng& rng) {
  return static_cast<double>(rng.integer(-1'000'000, 1'000'000)) * 1e-6;
}

/// K columns on a path or cycle, grid costs.
inline surfseg::ColumnGraph random_column_graph(Rng& rng, std::size_t K, std::size_t L, int delta,
                                                bool cycle) {
  surfseg::ColumnGraph g;
  g.columns = K;
  g.length = L;
  g.delta = delta;
  g.costs.resize(K * L);
  for (double& c : g.costs) c = grid_cost(rng);
  for (std::uint32_t k = 0; k + 1 < K; ++k) g.adjacency.emplace_back(k, k + 1);
  if (cycle && K > 2) g.adjacency.emplace_back(0, static_cast<std::uint32_t>(K - 1));
  return g;
}

/// Random network on 2..max_nodes nodes, source 0, sink n - 1, capacities
/// in [0, max_capacity]. No arcs into the source or out of the sink.
inline surfseg::FlowNetwork random_flow_network(Rng& rng, std::uint32_t max_nodes,
                                                std::int64_t max_capacity) {
  surfseg::FlowNetwork net;
  net.node_count = static_cast<std::uint32_t>(rng.integer(2, max_nodes));
  net.source = 0;
  net.sink = net.node_count - 1;
  const double density = rng.uniform(0.2, 0.8);
  for (std::uint32_t u = 0; u < net.node_count; ++u) {
    if (u == net.sink) continue;
    for (std::uint32_t v = 0; v < net.node_count; ++v) {
      if (v == u || v == net.source || !rng.coin(density)) continue;
      net.arcs.push_back({u, v, rng.integer(0, max_capacity)});
    }
  }
  return net;
}

}  // namespace testgen
