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
#include <utility>
#include <vector>

#include "surfseg/columns.hpp"
#include "surfseg/volume.hpp"

namespace surfseg {

/// K columns of L nodes with per-node costs. Node j here (0-based) is graph
/// node j+1; node 0 is the innermost.
struct ColumnGraph {
  std::size_t columns = 0;
  std::size_t length = 0;
  /// Row-major, costs[k * length + j].
  std::vector<double> costs;
  /// Unordered column pairs, each listed once.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> adjacency;
  int delta = 2;

  double cost(std::size_t k, std::size_t j) const { return costs[k * length + j]; }
  double& cost(std::size_t k, std::size_t j) { return costs[k * length + j]; }

  /// Finite costs, delta >= 0, in-range adjacency without self pairs.
  void validate() const;
};

/// Trilinear interpolation at a world position; 0 outside the voxel-center
/// hull of the volume.
double sample_trilinear_or_zero(const ProbabilityVolume& volume, const Vec3& world);

/// Trilinear interpolation with indices clamped to the volume.
double sample_trilinear_clamped(const ScalarVolume& volume, const Vec3& world);

/// c[k][j] = -sum_{i <= j} (p[k][i] - 0.5), p sampled at the column nodes.
ColumnGraph eq1_costs(const ColumnSet& columns, const ProbabilityVolume& prob, int delta = 2);

/// Same cost from a column of already sampled probabilities.
std::vector<double> eq1_column(const std::vector<double>& p);

/// Inverted gradient magnitude along each column: max|g| - |g[j]|, where g is
/// the central difference of the sampled intensity (one-sided at the ends).
ColumnGraph gradient_costs(const ColumnSet& columns, const ScalarVolume& intensity,
                           int delta = 2);

}  // namespace surfseg
