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

// Reference implementations used as test oracles. Deliberately naive: plain
// loops, no shared helpers with the library beyond the data types.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "surfseg/flow.hpp"
#include "surfseg/volume.hpp"

namespace oracle {

/// Binary grid extended by zeros in every direction.
struct Grid {
  std::int64_t nx, ny, nz;
  std::vector<int> v;
  int at(std::int64_t i, std::int64_t j, std::int64_t k) const {
    if (i < 0 || j < 0 || k < 0 || i >= nx || j >= ny || k >= nz) return 0;
    return v[static_cast<std::size_t>((k * ny + j) * nx + i)];
  }
};

inline Grid pad(const surfseg::LabelVolume& m, std::int64_t p) {
  const auto& d = m.dims();
  Grid g{d[0] + 2 * p, d[1] + 2 * p, d[2] + 2 * p, {}};
  g.v.assign(static_cast<std::size_t>(g.nx * g.ny * g.nz), 0);
  for (std::int64_t k = 0; k < d[2]; ++k)
    for (std::int64_t j = 0; j < d[1]; ++j)
      for (std::int64_t i = 0; i < d[0]; ++i)
        g.v[static_cast<std::size_t>(((k + p) * g.ny + j + p) * g.nx + i + p)] =
            m(i, j, k) != 0.0f;
  return g;
}

/// One 6-neighbour cross pass: erosion takes the minimum, dilation the maximum.
inline Grid cross_pass(const Grid& in, bool erode) {
  Grid out = in;
  static const int off[7][3] = {{0, 0, 0}, {1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  for (std::int64_t k = 0; k < in.nz; ++k)
    for (std::int64_t j = 0; j < in.ny; ++j)
      for (std::int64_t i = 0; i < in.nx; ++i) {
        int acc = erode ? 1 : 0;
        for (const auto& o : off) {
          const int s = in.at(i + o[0], j + o[1], k + o[2]);
          acc = erode ? std::min(acc, s) : std::max(acc, s);
        }
        out.v[static_cast<std::size_t>((k * in.ny + j) * in.nx + i)] = acc;
      }
  return out;
}

inline surfseg::LabelVolume unpad(const Grid& g, const surfseg::LabelVolume& like, std::int64_t p) {
  surfseg::LabelVolume out(like.geometry());
  const auto& d = like.dims();
  for (std::int64_t k = 0; k < d[2]; ++k)
    for (std::int64_t j = 0; j < d[1]; ++j)
      for (std::int64_t i = 0; i < d[0]; ++i)
        out.set(i, j, k, g.at(i + p, j + p, k + p) ? 1.0f : 0.0f);
  return out;
}

/// Opening/closing of the mask extended by background to all of Z^3, then
/// restricted to the volume.
inline surfseg::LabelVolume open_ref(const surfseg::LabelVolume& m, int n) {
  const std::int64_t p = 2 * n + 1;
  Grid g = pad(m, p);
  for (int t = 0; t < n; ++t) g = cross_pass(g, true);
  for (int t = 0; t < n; ++t) g = cross_pass(g, false);
  return unpad(g, m, p);
}

inline surfseg::LabelVolume close_ref(const surfseg::LabelVolume& m, int n) {
  const std::int64_t p = 2 * n + 1;
  Grid g = pad(m, p);
  for (int t = 0; t < n; ++t) g = cross_pass(g, false);
  for (int t = 0; t < n; ++t) g = cross_pass(g, true);
  return unpad(g, m, p);
}

/// Minimum s-t cut by enumerating every subset of the non-terminal nodes.
inline std::int64_t min_cut_exhaustive(const surfseg::FlowNetwork& net) {
  std::vector<std::uint32_t> inner;
  for (std::uint32_t v = 0; v < net.node_count; ++v) {
    if (v != net.source && v != net.sink) inner.push_back(v);
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const std::uint64_t subsets = std::uint64_t{1} << inner.size();
  std::vector<bool> side(net.node_count);
  for (std::uint64_t s = 0; s < subsets; ++s) {
    std::fill(side.begin(), side.end(), false);
    side[net.source] = true;
    for (std::size_t b = 0; b < inner.size(); ++b) side[inner[b]] = (s >> b) & 1;
    std::int64_t cut = 0;
    for (const auto& a : net.arcs) {
      if (side[a.from] && !side[a.to]) cut += a.capacity;
    }
    best = std::min(best, cut);
  }
  return best;
}

/// Cost of node j (1-based) as the literal negated running sum of p - 0.5.
inline double eq1_direct(const std::vector<double>& p, std::size_t j_one_based) {
  double s = 0.0;
  for (std::size_t i = 1; i <= j_one_based; ++i) s += p[i - 1] - 0.5;
  return -s;
}

}  // namespace oracle
