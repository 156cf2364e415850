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
#include <limits>
#include <string>

#include "surfseg/flow.hpp"

namespace surfseg {
namespace {

constexpr std::int64_t kCapacityLimit = std::int64_t{1} << 62;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  if (b > kCapacityLimit - a) {
    throw InputError("costs too large for the fixed integer scaling (capacity overflow)");
  }
  return a + b;
}

}  // namespace

void FlowNetwork::validate() const {
  if (source >= node_count || sink >= node_count || source == sink) {
    throw InputError("bad source/sink");
  }
  for (const FlowArc& a : arcs) {
    if (a.from >= node_count || a.to >= node_count) throw InputError("arc endpoint out of range");
    if (a.capacity < 0) throw InputError("negative arc capacity");
    if (a.to == source) throw InputError("arc into the source");
    if (a.from == sink) throw InputError("arc out of the sink");
  }
}

std::int64_t quantize_cost(double c) {
  const double scaled = std::nearbyint(c * kCostScale);  // default mode: half to even
  if (!(std::abs(scaled) <= 4503599627370496.0)) {        // 2^52
    throw InputError("cost " + std::to_string(c) + " too large for the fixed integer scaling");
  }
  return static_cast<std::int64_t>(scaled);
}

FlowNetwork build_flow_network(const ColumnGraph& graph) {
  graph.validate();
  const std::size_t K = graph.columns;
  const std::size_t L = graph.length;
  if (K * L + 2 > std::numeric_limits<std::uint32_t>::max()) {
    throw InputError("column graph too large");
  }

  std::vector<std::int64_t> q(graph.costs.size());
  std::int64_t abs_sum = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = quantize_cost(graph.costs[i]);
    abs_sum = checked_add(abs_sum, q[i] < 0 ? -q[i] : q[i]);
  }
  const std::int64_t shift = checked_add(static_cast<std::int64_t>(kCostScale), abs_sum);

  FlowNetwork net;
  net.node_count = static_cast<std::uint32_t>(K * L + 2);
  net.source = static_cast<std::uint32_t>(K * L);
  net.sink = net.source + 1;
  const auto id = [L](std::size_t k, std::size_t j) {
    return static_cast<std::uint32_t>(k * L + j);
  };

  std::int64_t finite_total = 0;
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t j = 0; j < L; ++j) {
      const std::int64_t cur = q[k * L + j];
      const std::int64_t w = j == 0 ? cur - shift : cur - q[k * L + j - 1];
      if (w < 0) {
        finite_total = checked_add(finite_total, -w);
        net.arcs.push_back({net.source, id(k, j), -w});
      } else if (w > 0) {
        finite_total = checked_add(finite_total, w);
        net.arcs.push_back({id(k, j), net.sink, w});
      }
    }
  }
  net.infinity = checked_add(finite_total, 1);

  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t j = 1; j < L; ++j) net.arcs.push_back({id(k, j), id(k, j - 1), net.infinity});
  }
  const std::size_t d = static_cast<std::size_t>(graph.delta);
  for (const auto& [a, b] : graph.adjacency) {
    for (std::size_t j = 0; j < L; ++j) {
      const std::size_t low = j > d ? j - d : 0;
      net.arcs.push_back({id(a, j), id(b, low), net.infinity});
      net.arcs.push_back({id(b, j), id(a, low), net.infinity});
    }
  }
  return net;
}

}  // namespace surfseg
