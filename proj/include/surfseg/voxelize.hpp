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

#include <cstddef>

#include "surfseg/columns.hpp"
#include "surfseg/mesh.hpp"
#include "surfseg/surface_solution.hpp"
#include "surfseg/volume.hpp"

namespace surfseg {

struct VoxelizeResult {
  LabelVolume mask;
  /// Voxels whose winding number is far from both 0 and 1 (|w - round(w)| >
  /// 0.25) or outside [-0.5, 1.5]. Nonzero means the cut mesh folds over
  /// itself somewhere.
  std::size_t ambiguous_voxels = 0;
  double min_winding = 0.0;
  double max_winding = 0.0;
};

/// Generalized winding number of a closed or open triangle soup at `point`.
double winding_number(const std::vector<Vec3>& vertices, const std::vector<Triangle>& triangles,
                      const Vec3& point);

/// Moves every mesh vertex to its chosen column node and labels voxel centers
/// with winding number > 0.5.
VoxelizeResult voxelize(const SurfaceSolution& solution, const ColumnSet& columns,
                        const SurfaceMesh& mesh, const Geometry& geometry);

}  // namespace surfseg
