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

#include "surfseg/costs.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace surfseg {
namespace {

struct Cell {
  std::int64_t i0;
  double f;
};

// Lower corner and fraction along one axis; u must be within [0, n - 1].
Cell axis_cell(double u, std::int64_t n) {
  if (n == 1) return {0, 0.0};
  std::int64_t i0 = static_cast<std::int64_t>(std::floor(u));
  i0 = std::clamp<std::int64_t>(i0, 0, n - 2);
  return {i0, u - static_cast<double>(i0)};
}

template <VolumeKind Kind>
double interpolate(const Volume<Kind>& v, const Vec3& u) {
  const Dims& d = v.dims();
  const Cell cx = axis_cell(u.x, d[0]);
  const Cell cy = axis_cell(u.y, d[1]);
  const Cell cz = axis_cell(u.z, d[2]);
  const std::int64_t x1 = std::min(cx.i0 + 1, d[0] - 1);
  const std::int64_t y1 = std::min(cy.i0 + 1, d[1] - 1);
  const std::int64_t z1 = std::min(cz.i0 + 1, d[2] - 1);
  const auto at = [&](std::int64_t i, std::int64_t j, std::int64_t k) {
    return static_cast<double>(v(i, j, k));
  };
  const double c00 = at(cx.i0, cy.i0, cz.i0) * (1 - cx.f) + at(x1, cy.i0, cz.i0) * cx.f;
  const double c10 = at(cx.i0, y1, cz.i0) * (1 - cx.f) + at(x1, y1, cz.i0) * cx.f;
  const double c01 = at(cx.i0, cy.i0, z1) * (1 - cx.f) + at(x1, cy.i0, z1) * cx.f;
  const double c11 = at(cx.i0, y1, z1) * (1 - cx.f) + at(x1, y1, z1) * cx.f;
  const double c0 = c00 * (1 - cy.f) + c10 * cy.f;
  const double c1 = c01 * (1 - cy.f) + c11 * cy.f;
  return c0 * (1 - cz.f) + c1 * cz.f;
}

bool inside_hull(const Vec3& u, const Dims& d) {
  return u.x >= 0.0 && u.y >= 0.0 && u.z >= 0.0 && u.x <= static_cast<double>(d[0] - 1) &&
         u.y <= static_cast<double>(d[1] - 1) && u.z <= static_cast<double>(d[2] - 1);
}

ColumnGraph empty_graph(const ColumnSet& columns, int delta) {
  if (delta < 0) throw InputError("delta must be >= 0");
  if (columns.size() == 0) throw InputError("no columns");
  ColumnGraph g;
  g.columns = columns.size();
  g.length = static_cast<std::size_t>(columns.length);
  g.costs.assign(g.columns * g.length, 0.0);
  g.adjacency = columns.adjacency;
  g.delta = delta;
  for (const auto& col : columns.columns) {
    if (col.size() != g.length) throw InputError("column length mismatch");
  }
  return g;
}

}  // namespace

void ColumnGraph::validate() const {
  if (columns == 0 || length == 0) throw InputError("column graph is empty");
  if (costs.size() != columns * length) throw InputError("cost table has the wrong size");
  if (delta < 0) throw InputError("delta must be >= 0");
  for (double c : costs) {
    if (!std::isfinite(c)) throw InputError("non-finite node cost");
  }
  for (const auto& [a, b] : adjacency) {
    if (a >= columns || b >= columns || a == b) {
      throw InputError("bad column pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
}

double sample_trilinear_or_zero(const ProbabilityVolume& volume, const Vec3& world) {
  const Vec3 u = volume.geometry().to_index(world);
  if (!inside_hull(u, volume.dims())) return 0.0;
  return interpolate(volume, u);
}

double sample_trilinear_clamped(const ScalarVolume& volume, const Vec3& world) {
  const Dims& d = volume.dims();
  Vec3 u = volume.geometry().to_index(world);
  u.x = std::clamp(u.x, 0.0, static_cast<double>(d[0] - 1));
  u.y = std::clamp(u.y, 0.0, static_cast<double>(d[1] - 1));
  u.z = std::clamp(u.z, 0.0, static_cast<double>(d[2] - 1));
  return interpolate(volume, u);
}

std::vector<double> eq1_column(const std::vector<double>& p) {
  std::vector<double> c(p.size());
  double sum = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    sum += p[j] - 0.5;
    c[j] = -sum;
  }
  return c;
}

ColumnGraph eq1_costs(const ColumnSet& columns, const ProbabilityVolume& prob, int delta) {
  ColumnGraph g = empty_graph(columns, delta);
  std::vector<double> p(g.length);
  for (std::size_t k = 0; k < g.columns; ++k) {
    for (std::size_t j = 0; j < g.length; ++j) {
      p[j] = sample_trilinear_or_zero(prob, columns.columns[k][j]);
    }
    const std::vector<double> c = eq1_column(p);
    std::copy(c.begin(), c.end(), g.costs.begin() + static_cast<std::ptrdiff_t>(k * g.length));
  }
  return g;
}

ColumnGraph gradient_costs(const ColumnSet& columns, const ScalarVolume& intensity, int delta) {
  ColumnGraph g = empty_graph(columns, delta);
  const std::size_t n = g.length;
  std::vector<double> s(n);
  std::vector<double> mag(n);
  for (std::size_t k = 0; k < g.columns; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      s[j] = sample_trilinear_clamped(intensity, columns.columns[k][j]);
    }
    double top = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double gj = 0.0;
      if (n > 1) {
        if (j == 0) gj = s[1] - s[0];
        else if (j == n - 1) gj = s[n - 1] - s[n - 2];
        else gj = 0.5 * (s[j + 1] - s[j - 1]);
      }
      mag[j] = std::abs(gj);
      top = std::max(top, mag[j]);
    }
    for (std::size_t j = 0; j < n; ++j) g.cost(k, j) = top - mag[j];
  }
  return g;
}

}  // namespace surfseg
