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

#include "surfseg/voxelize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace surfseg {

double winding_number(const std::vector<Vec3>& vertices, const std::vector<Triangle>& triangles,
                      const Vec3& point) {
  double total = 0.0;
  for (const Triangle& t : triangles) {
    const Vec3 a = vertices[t[0]] - point;
    const Vec3 b = vertices[t[1]] - point;
    const Vec3 c = vertices[t[2]] - point;
    const double la = norm(a);
    const double lb = norm(b);
    const double lc = norm(c);
    const double num = dot(a, cross(b, c));
    const double den = la * lb * lc + dot(a, b) * lc + dot(b, c) * la + dot(c, a) * lb;
    total += 2.0 * std::atan2(num, den);  // solid angle
  }
  return total / (4.0 * std::numbers::pi);
}

VoxelizeResult voxelize(const SurfaceSolution& solution, const ColumnSet& columns,
                        const SurfaceMesh& mesh, const Geometry& geometry) {
  geometry.validate();
  if (columns.size() != mesh.vertices.size() ||
      solution.boundary_index.size() != mesh.vertices.size()) {
    throw InputError("solution, columns and mesh disagree on the vertex count");
  }
  std::vector<Vec3> cut(mesh.vertices.size());
  Vec3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};
  Vec3 hi = -lo;
  for (std::size_t v = 0; v < cut.size(); ++v) {
    const int j = solution.boundary_index[v];
    if (j < 0 || j >= columns.length) throw InputError("boundary index out of range");
    cut[v] = columns.columns[v][static_cast<std::size_t>(j)];
    lo = {std::min(lo.x, cut[v].x), std::min(lo.y, cut[v].y), std::min(lo.z, cut[v].z)};
    hi = {std::max(hi.x, cut[v].x), std::max(hi.y, cut[v].y), std::max(hi.z, cut[v].z)};
  }

  VoxelizeResult out{LabelVolume(geometry), 0, 0.0, 0.0};
  // Outside the bounding box of the cut mesh the winding number is ~0.
  const Vec3 ilo = geometry.to_index(lo);
  const Vec3 ihi = geometry.to_index(hi);
  std::array<std::int64_t, 3> from{};
  std::array<std::int64_t, 3> to{};
  const double los[3] = {ilo.x, ilo.y, ilo.z};
  const double his[3] = {ihi.x, ihi.y, ihi.z};
  for (int a = 0; a < 3; ++a) {
    from[a] = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(los[a])));
    to[a] =
        std::min<std::int64_t>(geometry.dims[a] - 1, static_cast<std::int64_t>(std::ceil(his[a])));
  }
  double wmin = 0.0;
  double wmax = 0.0;
  for (std::int64_t k = from[2]; k <= to[2]; ++k) {
    for (std::int64_t j = from[1]; j <= to[1]; ++j) {
      for (std::int64_t i = from[0]; i <= to[0]; ++i) {
        const double w = winding_number(cut, mesh.triangles, geometry.voxel_center(i, j, k));
        wmin = std::min(wmin, w);
        wmax = std::max(wmax, w);
        if (std::abs(w - std::round(w)) > 0.25 || w < -0.5 || w > 1.5) ++out.ambiguous_voxels;
        if (w > 0.5) out.mask.set(i, j, k, 1.0f);
      }
    }
  }
  out.min_winding = wmin;
  out.max_winding = wmax;
  return out;
}

}  // namespace surfseg
