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

#include <algorithm>
#include <limits>
#include <queue>

#include "surfseg/flow.hpp"

namespace surfseg {
namespace {

// Residual arcs 2e (forward) and 2e + 1 (reverse) for input arc e, with
// per-node arc lists in CSR form.
struct Residual {
  std::vector<std::uint32_t> first;  // per node, offset into `out`
  std::vector<std::uint32_t> out;    // residual arc ids grouped by tail
  std::vector<std::uint32_t> head;
  std::vector<std::int64_t> cap;

  explicit Residual(const FlowNetwork& net) {
    const std::size_t m = net.arcs.size();
    head.resize(2 * m);
    cap.resize(2 * m);
    std::vector<std::uint32_t> degree(net.node_count + 1, 0);
    for (std::size_t e = 0; e < m; ++e) {
      const FlowArc& a = net.arcs[e];
      head[2 * e] = a.to;
      cap[2 * e] = a.capacity;
      head[2 * e + 1] = a.from;
      cap[2 * e + 1] = 0;
      ++degree[a.from + 1];
      ++degree[a.to + 1];
    }
    first.assign(net.node_count + 1, 0);
    for (std::size_t v = 0; v < net.node_count; ++v) first[v + 1] = first[v] + degree[v + 1];
    out.resize(2 * m);
    std::vector<std::uint32_t> fill(first.begin(), first.end() - 1);
    for (std::size_t e = 0; e < m; ++e) {
      out[fill[net.arcs[e].from]++] = static_cast<std::uint32_t>(2 * e);
      out[fill[net.arcs[e].to]++] = static_cast<std::uint32_t>(2 * e + 1);
    }
  }
};

bool build_levels(const Residual& r, std::uint32_t s, std::uint32_t t, std::vector<int>& level) {
  std::fill(level.begin(), level.end(), -1);
  std::queue<std::uint32_t> queue;
  level[s] = 0;
  queue.push(s);
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop();
    for (std::uint32_t i = r.first[v]; i < r.first[v + 1]; ++i) {
      const std::uint32_t e = r.out[i];
      if (r.cap[e] > 0 && level[r.head[e]] < 0) {
        level[r.head[e]] = level[v] + 1;
        queue.push(r.head[e]);
      }
    }
  }
  return level[t] >= 0;
}

// Blocking flow by repeated iterative DFS over the level graph.
std::int64_t blocking_flow(Residual& r, std::uint32_t s, std::uint32_t t,
                           const std::vector<int>& level, std::vector<std::uint32_t>& cursor) {
  std::int64_t total = 0;
  std::vector<std::uint32_t> path;  // arc ids from s
  std::uint32_t v = s;
  while (true) {
    if (v == t) {
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (std::uint32_t e : path) push = std::min(push, r.cap[e]);
      for (std::uint32_t e : path) {
        r.cap[e] -= push;
        r.cap[e ^ 1u] += push;
      }
      total += push;
      // Retreat to the tail of the first saturated arc.
      std::size_t keep = 0;
      while (r.cap[path[keep]] > 0) ++keep;
      path.resize(keep);
      v = keep == 0 ? s : r.head[path[keep - 1]];
      continue;
    }
    bool advanced = false;
    for (; cursor[v] < r.first[v + 1]; ++cursor[v]) {
      const std::uint32_t e = r.out[cursor[v]];
      const std::uint32_t w = r.head[e];
      if (r.cap[e] > 0 && level[w] == level[v] + 1) {
        path.push_back(e);
        v = w;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    if (v == s) break;
    // Dead end: retreat and skip the arc that led here.
    path.pop_back();
    v = path.empty() ? s : r.head[path.back()];
    ++cursor[v];
  }
  return total;
}

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& network) {
  network.validate();
  Residual r(network);
  const std::uint32_t s = network.source;
  const std::uint32_t t = network.sink;
  std::vector<int> level(network.node_count);
  std::vector<std::uint32_t> cursor(network.node_count);

  MaxFlowResult result;
  while (build_levels(r, s, t, level)) {
    std::copy(r.first.begin(), r.first.end() - 1, cursor.begin());
    result.flow += blocking_flow(r, s, t, level, cursor);
  }
  // After the last phase `level` marks exactly the residual reach of s.
  result.source_side.resize(network.node_count);
  for (std::size_t v = 0; v < network.node_count; ++v) result.source_side[v] = level[v] >= 0;
  return result;
}

}  // namespace surfseg
