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

#include "surfseg/columns.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <unordered_map>

namespace surfseg {
namespace {

// Field direction oriented to continue `heading`; `heading` where the field vanishes.
Vec3 oriented_direction(const ElfField& field, const Vec3& x, const Vec3& heading) {
  const std::optional<Vec3> d = field.direction(x);
  if (!d) return heading;
  return dot(*d, heading) < 0.0 ? -*d : *d;
}

Vec3 rk2_step(const ElfField& field, const Vec3& x, const Vec3& heading, double h) {
  const Vec3 d1 = oriented_direction(field, x, heading);
  const Vec3 d2 = oriented_direction(field, x + (0.5 * h) * d1, d1);
  return d2;
}

}  // namespace

const char* to_string(ColumnMode mode) { return mode == ColumnMode::elf ? "elf" : "normal"; }

ColumnMode parse_column_mode(std::string_view text) {
  if (text == "elf") return ColumnMode::elf;
  if (text == "normal") return ColumnMode::normal;
  throw InputError("unknown column mode '" + std::string(text) + "'");
}

ColumnSet build_columns(const SurfaceMesh& mesh, const ColumnOptions& options) {
  if (options.length < 2) throw InputError("column length must be >= 2");
  if (!(options.node_spacing > 0.0)) throw InputError("node spacing must be > 0");
  if (mesh.vertices.empty() || mesh.vertex_normals.size() != mesh.vertices.size()) {
    throw InputError("mesh has no vertices or no normals");
  }
  if (!is_closed(mesh.triangles)) throw InputError("columns need a closed mesh");

  ColumnSet out;
  out.node_spacing = options.node_spacing;
  out.length = options.length;
  out.base_index = options.length / 2;
  const double h = options.node_spacing;
  const int base = out.base_index;

  std::optional<ElfField> field;
  if (options.mode == ColumnMode::elf) field.emplace(mesh.vertices, options.elf);

  out.columns.resize(mesh.vertices.size());
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    std::vector<Vec3>& col = out.columns[v];
    col.assign(static_cast<std::size_t>(options.length), Vec3{});
    const Vec3 p = mesh.vertices[v];
    const Vec3 n = mesh.vertex_normals[v];
    col[static_cast<std::size_t>(base)] = p;

    if (options.mode == ColumnMode::normal) {
      for (int j = 0; j < options.length; ++j) {
        col[static_cast<std::size_t>(j)] = p + (static_cast<double>(j - base) * h) * n;
      }
      continue;
    }

    // Inside the base vertex's exclusion ball the field sees a ring of
    // neighbours without its centre, so the column follows the normal there.
    const auto near_base = [&](const Vec3& x) {
      return distance(x, p) <= options.elf.exclusion_radius;
    };
    Vec3 x = p;
    Vec3 heading = n;
    for (int j = base + 1; j < options.length; ++j) {
      if (!near_base(x)) heading = rk2_step(*field, x, heading, h);
      x = x + h * heading;
      col[static_cast<std::size_t>(j)] = x;
    }
    x = p;
    heading = -n;
    for (int j = base - 1; j >= 0; --j) {
      if (!near_base(x)) heading = rk2_step(*field, x, heading, h);
      x = x + h * heading;
      col[static_cast<std::size_t>(j)] = x;
    }
    for (const Vec3& node : col) {
      if (!is_finite(node)) throw InternalError("column tracing produced a non-finite node");
    }
  }

  for (std::size_t v = 0; v < mesh.vertex_adjacency.size(); ++v) {
    for (std::uint32_t u : mesh.vertex_adjacency[v]) {
      if (u > v) out.adjacency.emplace_back(static_cast<std::uint32_t>(v), u);
    }
  }
  return out;
}

double min_intercolumn_distance(const ColumnSet& columns, double cutoff) {
  if (!(cutoff > 0.0)) throw InputError("cutoff must be > 0");
  const auto cell_of = [&](double c) { return static_cast<std::int64_t>(std::floor(c / cutoff)); };
  const auto key = [](std::int64_t i, std::int64_t j, std::int64_t k) {
    return (static_cast<std::uint64_t>(i & 0x1fffff) << 42) |
           (static_cast<std::uint64_t>(j & 0x1fffff) << 21) |
           static_cast<std::uint64_t>(k & 0x1fffff);
  };
  struct Entry {
    std::uint32_t column;
    Vec3 position;
  };
  std::unordered_map<std::uint64_t, std::vector<Entry>> grid;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const Vec3& node : columns.columns[c]) {
      grid[key(cell_of(node.x), cell_of(node.y), cell_of(node.z))].push_back(
          {static_cast<std::uint32_t>(c), node});
    }
  }
  double best = cutoff;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const Vec3& node : columns.columns[c]) {
      const std::int64_t ci = cell_of(node.x);
      const std::int64_t cj = cell_of(node.y);
      const std::int64_t ck = cell_of(node.z);
      for (std::int64_t dk = -1; dk <= 1; ++dk)
        for (std::int64_t dj = -1; dj <= 1; ++dj)
          for (std::int64_t di = -1; di <= 1; ++di) {
            auto it = grid.find(key(ci + di, cj + dj, ck + dk));
            if (it == grid.end()) continue;
            for (const Entry& e : it->second) {
              if (e.column == c) continue;
              best = std::min(best, distance(e.position, node));
            }
          }
    }
  }
  return best;
}

}  // namespace surfseg
