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

/// One chosen node per column (0-based, innermost = 0).
struct SurfaceSolution {
  int delta = 0;
  std::vector<int> boundary_index;
  /// Sum of c[k][j_k] in column order.
  double total_cost = 0.0;
};

/// j_k = highest node of column k on the source side. Throws InternalError if
/// a column has no node there.
SurfaceSolution extract_surface(const std::vector<bool>& source_side, const ColumnGraph& graph);

/// Throws InternalError unless every index is in range and every adjacent
/// pair differs by at most delta.
void check_smoothness(const SurfaceSolution& solution, const ColumnGraph& graph);

/// Network construction, max flow and extraction, with the smoothness check.
SurfaceSolution solve_surface(const ColumnGraph& graph);

/// Exhaustive search in lexicographic order. Candidates are ranked by the
/// same quantized cost the flow network optimizes; ties keep the
/// lexicographically smallest assignment. Throws InputError once more than
/// `max_visits` partial assignments have been explored.
SurfaceSolution brute_force_surface(const ColumnGraph& graph,
                                    std::uint64_t max_visits = 10'000'000);

}  // namespace surfseg
