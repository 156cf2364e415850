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

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "surfseg/vec3.hpp"
#include "surfseg/volume.hpp"

namespace surfseg {

using Triangle = std::array<std::uint32_t, 3>;

/// Closed, consistently oriented triangle mesh in world coordinates (mm).
struct SurfaceMesh {
  std::vector<Vec3> vertices;
  std::vector<Triangle> triangles;
  /// Sorted, edge-connected neighbours of every vertex.
  std::vector<std::vector<std::uint32_t>> vertex_adjacency;
  /// Unit, outward.
  std::vector<Vec3> vertex_normals;
};

/// Raised when a surface cannot be built or is not watertight.
class MeshError : public InputError {
 public:
  using InputError::InputError;
};

/// Builds adjacency and normals and orients the mesh outward. Throws
/// MeshError unless every edge is shared by exactly two triangles with
/// opposite directions.
SurfaceMesh make_mesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles);

/// Signed volume enclosed by the mesh (sum of origin tetrahedra), mm^3.
double enclosed_volume(const std::vector<Vec3>& vertices, const std::vector<Triangle>& triangles);
inline double enclosed_volume(const SurfaceMesh& mesh) {
  return enclosed_volume(mesh.vertices, mesh.triangles);
}

/// True when every directed edge appears once and its reverse once.
bool is_closed(const std::vector<Triangle>& triangles);

/// Boundary of a single-component mask: one pass of 3x3x3 box smoothing,
/// then marching cubes at 0.5. The mask is treated as 0 outside the volume,
/// so objects touching the border still close.
SurfaceMesh extract_mesh(const LabelVolume& mask);

/// Disjoint union of closed meshes; each part keeps its own orientation.
SurfaceMesh merge_meshes(const std::vector<SurfaceMesh>& parts);

/// Subdivided icosahedron projected onto a sphere.
SurfaceMesh sphere_mesh(const Vec3& center, double radius, int subdivisions);

/// ASCII STL, numbers printed with "%.9g".
std::string to_ascii_stl(const SurfaceMesh& mesh, const std::string& name = "surface");
void write_stl(const SurfaceMesh& mesh, const std::filesystem::path& path);

}  // namespace surfseg
