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
#include <string_view>
#include <utility>
#include <vector>

#include "surfseg/elf.hpp"
#include "surfseg/mesh.hpp"

namespace surfseg {

enum class ColumnMode { elf, normal };

const char* to_string(ColumnMode mode);
ColumnMode parse_column_mode(std::string_view text);

struct ColumnOptions {
  int length = 50;
  double node_spacing = 0.5;
  ColumnMode mode = ColumnMode::elf;
  /// Tracing uses a 1/r^4 falloff; the Coulomb field is too flat inside
  /// a closed charge shell to steer inward columns.
  ElfOptions elf{.exclusion_radius = 0.75, .power = 5};
};

/// One column of nodes per mesh vertex, innermost node first. Node
/// `base_index` is the vertex itself.
struct ColumnSet {
  std::vector<std::vector<Vec3>> columns;
  double node_spacing = 0.5;
  int length = 50;
  int base_index = 25;
  /// Column pairs (a < b) taken from the mesh edges.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> adjacency;

  std::size_t size() const { return columns.size(); }
};

/// Traces columns from every vertex.
///
/// normal mode: straight lines along the vertex normal.
/// elf mode: steps that start within the exclusion radius of the base vertex
/// follow the vertex normal (both sides); later nodes follow field lines of
/// the vertex charges by RK2
/// midpoint steps of exactly `node_spacing`. The field is followed with the
/// sign that continues the previous heading, and where it vanishes the
/// previous heading is reused.
ColumnSet build_columns(const SurfaceMesh& mesh, const ColumnOptions& options = {});

/// Smallest distance between nodes of two different columns, capped at
/// `cutoff` (the search only looks that far).
double min_intercolumn_distance(const ColumnSet& columns, double cutoff);

}  // namespace surfseg
