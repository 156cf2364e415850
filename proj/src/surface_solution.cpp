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

#include "surfseg/surface_solution.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "surfseg/flow.hpp"

namespace surfseg {
namespace {

double column_order_sum(const ColumnGraph& graph, const std::vector<int>& index) {
  double total = 0.0;
  for (std::size_t k = 0; k < graph.columns; ++k) {
    total += graph.cost(k, static_cast<std::size_t>(index[k]));
  }
  return total;
}

}  // namespace

SurfaceSolution extract_surface(const std::vector<bool>& source_side, const ColumnGraph& graph) {
  graph.validate();
  if (source_side.size() < graph.columns * graph.length) {
    throw InternalError("source side does not cover the column graph");
  }
  SurfaceSolution out;
  out.delta = graph.delta;
  out.boundary_index.assign(graph.columns, -1);
  for (std::size_t k = 0; k < graph.columns; ++k) {
    for (std::size_t j = graph.length; j-- > 0;) {
      if (source_side[k * graph.length + j]) {
        out.boundary_index[k] = static_cast<int>(j);
        break;
      }
    }
    if (out.boundary_index[k] < 0) {
      throw InternalError("column " + std::to_string(k) + " has no node in the closed set");
    }
  }
  out.total_cost = column_order_sum(graph, out.boundary_index);
  return out;
}

void check_smoothness(const SurfaceSolution& solution, const ColumnGraph& graph) {
  if (solution.boundary_index.size() != graph.columns) {
    throw InternalError("solution size does not match the column count");
  }
  for (int j : solution.boundary_index) {
    if (j < 0 || static_cast<std::size_t>(j) >= graph.length) {
      throw InternalError("boundary index out of range");
    }
  }
  for (const auto& [a, b] : graph.adjacency) {
    if (std::abs(solution.boundary_index[a] - solution.boundary_index[b]) > graph.delta) {
      throw InternalError("smoothness violated between columns " + std::to_string(a) + " and " +
                          std::to_string(b));
    }
  }
}

SurfaceSolution solve_surface(const ColumnGraph& graph) {
  const MaxFlowResult flow = max_flow(build_flow_network(graph));
  SurfaceSolution s = extract_surface(flow.source_side, graph);
  check_smoothness(s, graph);
  return s;
}

SurfaceSolution brute_force_surface(const ColumnGraph& graph, std::uint64_t max_visits) {
  graph.validate();
  const std::size_t K = graph.columns;
  const int L = static_cast<int>(graph.length);
  std::vector<std::int64_t> q(graph.costs.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = quantize_cost(graph.costs[i]);

  // Earlier neighbours of each column, for pruning during the descent.
  std::vector<std::vector<std::size_t>> earlier(K);
  for (const auto& [a, b] : graph.adjacency) {
    if (a < b) earlier[b].push_back(a);
    else earlier[a].push_back(b);
  }

  std::vector<int> current(K, 0);
  std::vector<int> best;
  std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
  std::uint64_t visits = 0;

  const auto feasible = [&](std::size_t k, int j) {
    for (std::size_t a : earlier[k]) {
      if (std::abs(current[a] - j) > graph.delta) return false;
    }
    return true;
  };
  // Iterative depth-first enumeration in lexicographic order.
  std::vector<std::int64_t> partial(K + 1, 0);
  std::size_t k = 0;
  current[0] = -1;
  while (true) {
    int j = current[k] + 1;
    while (j < L && !feasible(k, j)) ++j;
    if (j >= L) {
      if (k == 0) break;
      --k;
      continue;
    }
    current[k] = j;
    if (++visits > max_visits) {
      throw InputError("instance too large for exhaustive search (more than " +
                       std::to_string(max_visits) + " visits)");
    }
    partial[k + 1] = partial[k] + q[k * graph.length + static_cast<std::size_t>(j)];
    if (k + 1 == K) {
      if (partial[K] < best_cost) {
        best_cost = partial[K];
        best = current;
      }
      continue;
    }
    ++k;
    current[k] = -1;
  }
  if (best.empty()) throw InternalError("no feasible surface found");

  SurfaceSolution out;
  out.delta = graph.delta;
  out.boundary_index = best;
  out.total_cost = column_order_sum(graph, best);
  return out;
}

}  // namespace surfseg
