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

#include <cstdint>
#include <vector>

#include "surfseg/costs.hpp"

namespace surfseg {

struct FlowArc {
  std::uint32_t from;
  std::uint32_t to;
  std::int64_t capacity;
};

/// Directed network with integer capacities. Graph node (k, j) of a
/// ColumnGraph maps to id k * L + j; source and sink come after them.
struct FlowNetwork {
  std::uint32_t node_count = 0;
  std::uint32_t source = 0;
  std::uint32_t sink = 0;
  std::vector<FlowArc> arcs;
  /// Capacity used for the constraint arcs.
  std::int64_t infinity = 0;

  /// Non-negative capacities, valid endpoints, nothing into the source or
  /// out of the sink.
  void validate() const;
};

/// Node costs are quantized to integers at this scale.
inline constexpr double kCostScale = 1e6;

/// c * kCostScale rounded half to even. Throws InputError when the result
/// does not fit comfortably in 53 bits.
std::int64_t quantize_cost(double c);

/// Minimum-closed-set network whose minimum cut picks the optimal surface.
/// Costs are quantized first and the per-node weights are differences of
/// quantized costs, so the network objective is exactly the quantized sum.
FlowNetwork build_flow_network(const ColumnGraph& graph);

struct MaxFlowResult {
  std::int64_t flow = 0;
  /// source_side[v] is true when v is reachable from the source in the
  /// final residual network.
  std::vector<bool> source_side;
};

/// Exact maximum flow (Dinic). Deterministic for a fixed arc order.
MaxFlowResult max_flow(const FlowNetwork& network);

}  // namespace surfseg
