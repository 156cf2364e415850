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

#include "surfseg/mesh.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <unordered_map>

#include "marching_cubes_tables.hpp"
#include "surfseg/morphology.hpp"

namespace surfseg {
namespace {

std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

bool is_closed(const std::vector<Triangle>& triangles) {
  std::unordered_map<std::uint64_t, int> directed;
  directed.reserve(triangles.size() * 3);
  for (const Triangle& t : triangles) {
    for (int e = 0; e < 3; ++e) {
      const std::uint32_t a = t[e];
      const std::uint32_t b = t[(e + 1) % 3];
      if (a == b) return false;
      if (++directed[edge_key(a, b)] > 1) return false;
    }
  }
  for (const auto& [key, count] : directed) {
    const auto a = static_cast<std::uint32_t>(key >> 32);
    const auto b = static_cast<std::uint32_t>(key & 0xffffffffu);
    auto it = directed.find(edge_key(b, a));
    if (it == directed.end() || it->second != 1) return false;
  }
  return true;
}

double enclosed_volume(const std::vector<Vec3>& vertices, const std::vector<Triangle>& triangles) {
  double six_v = 0.0;
  for (const Triangle& t : triangles) {
    six_v += dot(vertices[t[0]], cross(vertices[t[1]], vertices[t[2]]));
  }
  return six_v / 6.0;
}

SurfaceMesh make_mesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles) {
  if (triangles.empty()) throw MeshError("mesh has no triangles");
  for (const Triangle& t : triangles) {
    for (std::uint32_t v : t) {
      if (v >= vertices.size()) throw MeshError("triangle references a missing vertex");
    }
  }
  if (!is_closed(triangles)) {
    throw MeshError("mesh is not closed and consistently oriented");
  }
  if (enclosed_volume(vertices, triangles) < 0.0) {
    for (Triangle& t : triangles) std::swap(t[1], t[2]);
  }

  SurfaceMesh mesh;
  mesh.vertices = std::move(vertices);
  mesh.triangles = std::move(triangles);
  const std::size_t nv = mesh.vertices.size();
  mesh.vertex_adjacency.assign(nv, {});
  mesh.vertex_normals.assign(nv, Vec3{});
  for (const Triangle& t : mesh.triangles) {
    const Vec3 area2 = cross(mesh.vertices[t[1]] - mesh.vertices[t[0]],
                             mesh.vertices[t[2]] - mesh.vertices[t[0]]);
    for (int e = 0; e < 3; ++e) {
      mesh.vertex_normals[t[e]] += area2;
      // Each undirected edge is seen twice, once per direction.
      mesh.vertex_adjacency[t[e]].push_back(t[(e + 1) % 3]);
      mesh.vertex_adjacency[t[(e + 1) % 3]].push_back(t[e]);
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    auto& adj = mesh.vertex_adjacency[v];
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    const double len = norm(mesh.vertex_normals[v]);
    if (adj.empty()) throw MeshError("mesh has an unreferenced vertex");
    if (!(len > 0.0)) throw MeshError("vertex normal is undefined (degenerate fan)");
    mesh.vertex_normals[v] *= 1.0 / len;
  }
  return mesh;
}

SurfaceMesh extract_mesh(const LabelVolume& mask) {
  const Components comps = label_components(mask);
  if (comps.count() == 0) throw MeshError("cannot extract a surface from an empty mask");
  if (comps.count() > 1) {
    throw MeshError("mask has " + std::to_string(comps.count()) +
                    " connected components; expected exactly one");
  }
  if (comps.sizes[0] < 8) throw MeshError("mask component has fewer than 8 voxels");

  const Geometry& g = mask.geometry();
  const Dims n = g.dims;

  // Box sums over a grid extended by one voxel per side. Index e maps to
  // voxel e - 1; the extended layer sees at most 9 foreground voxels, so it
  // always stays below the iso-level and closes the surface.
  const Dims ext = {n[0] + 2, n[1] + 2, n[2] + 2};
  const auto ext_index = [&](std::int64_t i, std::int64_t j, std::int64_t k) {
    return static_cast<std::size_t>((k * ext[1] + j) * ext[0] + i);
  };
  std::vector<int> a(static_cast<std::size_t>(ext[0] * ext[1] * ext[2]), 0);
  std::vector<int> b(a.size(), 0);
  for (std::int64_t k = 0; k < n[2]; ++k)
    for (std::int64_t j = 0; j < n[1]; ++j)
      for (std::int64_t i = 0; i < n[0]; ++i)
        a[ext_index(i + 1, j + 1, k + 1)] = mask(i, j, k) != 0.0f;
  const auto box_pass = [&](const std::vector<int>& src, std::vector<int>& dst, int axis) {
    for (std::int64_t k = 0; k < ext[2]; ++k)
      for (std::int64_t j = 0; j < ext[1]; ++j)
        for (std::int64_t i = 0; i < ext[0]; ++i) {
          int sum = 0;
          for (int d = -1; d <= 1; ++d) {
            std::int64_t c[3] = {i, j, k};
            c[axis] += d;
            if (c[axis] < 0 || c[axis] >= ext[axis]) continue;
            sum += src[ext_index(c[0], c[1], c[2])];
          }
          dst[ext_index(i, j, k)] = sum;
        }
  };
  box_pass(a, b, 0);
  box_pass(b, a, 1);
  box_pass(a, b, 2);
  // b holds 27 * smoothed value; the iso-level 0.5 is 13.5, never attained.
  const auto value = [&](std::int64_t i, std::int64_t j, std::int64_t k) {
    return static_cast<double>(b[ext_index(i, j, k)]) / 27.0;
  };
  const auto position = [&](std::int64_t i, std::int64_t j, std::int64_t k) {
    return g.voxel_center(i - 1, j - 1, k - 1);
  };

  std::vector<Vec3> vertices;
  std::vector<Triangle> triangles;
  std::unordered_map<std::uint64_t, std::uint32_t> edge_vertex;
  const auto vertex_on_edge = [&](std::int64_t i, std::int64_t j, std::int64_t k, int edge) {
    const auto& c0 = detail::kCorner[static_cast<std::size_t>(detail::kEdgeCorners[edge][0])];
    const auto& c1 = detail::kCorner[static_cast<std::size_t>(detail::kEdgeCorners[edge][1])];
    std::int64_t p0[3] = {i + c0[0], j + c0[1], k + c0[2]};
    std::int64_t p1[3] = {i + c1[0], j + c1[1], k + c1[2]};
    int axis = 0;
    while (p0[axis] == p1[axis]) ++axis;
    if (p1[axis] < p0[axis]) std::swap(p0, p1);
    const std::uint64_t key = ext_index(p0[0], p0[1], p0[2]) * 3 + static_cast<std::uint64_t>(axis);
    auto [it, inserted] = edge_vertex.try_emplace(key, static_cast<std::uint32_t>(vertices.size()));
    if (inserted) {
      const double v0 = value(p0[0], p0[1], p0[2]);
      const double v1 = value(p1[0], p1[1], p1[2]);
      const double t = (0.5 - v0) / (v1 - v0);
      const Vec3 x0 = position(p0[0], p0[1], p0[2]);
      const Vec3 x1 = position(p1[0], p1[1], p1[2]);
      vertices.push_back(x0 + t * (x1 - x0));
    }
    return it->second;
  };

  for (std::int64_t k = 0; k + 1 < ext[2]; ++k)
    for (std::int64_t j = 0; j + 1 < ext[1]; ++j)
      for (std::int64_t i = 0; i + 1 < ext[0]; ++i) {
        int cube = 0;
        for (int c = 0; c < 8; ++c) {
          const auto& o = detail::kCorner[static_cast<std::size_t>(c)];
          if (value(i + o[0], j + o[1], k + o[2]) < 0.5) cube |= 1 << c;
        }
        const std::int8_t* row = detail::kTriTable[cube];
        for (int t = 0; t < 15 && row[t] >= 0; t += 3) {
          triangles.push_back(
              {vertex_on_edge(i, j, k, row[t]), vertex_on_edge(i, j, k, row[t + 1]),
               vertex_on_edge(i, j, k, row[t + 2])});
        }
      }
  return make_mesh(std::move(vertices), std::move(triangles));
}

SurfaceMesh merge_meshes(const std::vector<SurfaceMesh>& parts) {
  if (parts.empty()) throw MeshError("nothing to merge");
  SurfaceMesh out;
  for (const SurfaceMesh& part : parts) {
    const auto base = static_cast<std::uint32_t>(out.vertices.size());
    out.vertices.insert(out.vertices.end(), part.vertices.begin(), part.vertices.end());
    out.vertex_normals.insert(out.vertex_normals.end(), part.vertex_normals.begin(),
                              part.vertex_normals.end());
    for (const Triangle& t : part.triangles) {
      out.triangles.push_back({t[0] + base, t[1] + base, t[2] + base});
    }
    for (const auto& adj : part.vertex_adjacency) {
      auto& dst = out.vertex_adjacency.emplace_back();
      for (std::uint32_t u : adj) dst.push_back(u + base);
    }
  }
  return out;
}

SurfaceMesh sphere_mesh(const Vec3& center, double radius, int subdivisions) {
  if (!(radius > 0.0)) throw InputError("sphere radius must be > 0");
  if (subdivisions < 0 || subdivisions > 7) throw InputError("sphere subdivisions out of range");
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> unit = {{-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
                            {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
                            {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  for (Vec3& v : unit) v = normalized(v);
  std::vector<Triangle> tris = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                                {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                                {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                                {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> midpoint;
    const auto mid = [&](std::uint32_t a, std::uint32_t b) {
      const auto key = std::minmax(a, b);
      auto [it, inserted] =
          midpoint.try_emplace({key.first, key.second}, static_cast<std::uint32_t>(unit.size()));
      if (inserted) unit.push_back(normalized(unit[a] + unit[b]));
      return it->second;
    };
    std::vector<Triangle> next;
    next.reserve(tris.size() * 4);
    for (const Triangle& t : tris) {
      const std::uint32_t ab = mid(t[0], t[1]);
      const std::uint32_t bc = mid(t[1], t[2]);
      const std::uint32_t ca = mid(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }
  std::vector<Vec3> vertices;
  vertices.reserve(unit.size());
  for (const Vec3& u : unit) vertices.push_back(center + radius * u);
  return make_mesh(std::move(vertices), std::move(tris));
}

std::string to_ascii_stl(const SurfaceMesh& mesh, const std::string& name) {
  std::string out = "solid " + name + "\n";
  char buf[256];
  const auto vec = [&](const char* prefix, const Vec3& v) {
    std::snprintf(buf, sizeof buf, "%s %.9g %.9g %.9g\n", prefix, v.x, v.y, v.z);
    out += buf;
  };
  for (const Triangle& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    const Vec3 n = cross(b - a, c - a);
    const double len = norm(n);
    vec("  facet normal", len > 0.0 ? n * (1.0 / len) : Vec3{});
    out += "    outer loop\n";
    vec("      vertex", a);
    vec("      vertex", b);
    vec("      vertex", c);
    out += "    endloop\n  endfacet\n";
  }
  out += "endsolid " + name + "\n";
  return out;
}

void write_stl(const SurfaceMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  out << to_ascii_stl(mesh);
}

}  // namespace surfseg
