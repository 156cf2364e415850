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

#include "surfseg/morphology.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "surfseg/simd/kernels.hpp"

namespace surfseg {
namespace {

// Byte mask padded by `margin` voxels of working domain plus a one-voxel
// frame that is never written and reads as background.
class PaddedMask {
 public:
  PaddedMask(const LabelVolume& mask, std::int64_t margin)
      : margin_(margin), dims_(mask.dims()) {
    for (int a = 0; a < 3; ++a) padded_[a] = dims_[a] + 2 * (margin + 1);
    cur_.assign(static_cast<std::size_t>(padded_[0] * padded_[1] * padded_[2]), 0);
    next_ = cur_;
    const std::int64_t off = margin + 1;
    for (std::int64_t k = 0; k < dims_[2]; ++k)
      for (std::int64_t j = 0; j < dims_[1]; ++j)
        for (std::int64_t i = 0; i < dims_[0]; ++i)
          cur_[at(i + off, j + off, k + off)] = mask(i, j, k) != 0.0f;
  }

  void erode() { pass(true); }
  void dilate() { pass(false); }

  LabelVolume crop(const Geometry& geometry) const {
    LabelVolume out(geometry);
    const std::int64_t off = margin_ + 1;
    for (std::int64_t k = 0; k < dims_[2]; ++k)
      for (std::int64_t j = 0; j < dims_[1]; ++j)
        for (std::int64_t i = 0; i < dims_[0]; ++i)
          out.set(i, j, k, cur_[at(i + off, j + off, k + off)] ? 1.0f : 0.0f);
    return out;
  }

 private:
  std::size_t at(std::int64_t i, std::int64_t j, std::int64_t k) const {
    return static_cast<std::size_t>((k * padded_[1] + j) * padded_[0] + i);
  }

  void pass(bool erosion) {
    const auto& kern = simd::active();
    const std::size_t row_len = static_cast<std::size_t>(padded_[0] - 2);
    const std::int64_t dy = padded_[0];
    const std::int64_t dz = padded_[0] * padded_[1];
    for (std::int64_t k = 1; k + 1 < padded_[2]; ++k) {
      for (std::int64_t j = 1; j + 1 < padded_[1]; ++j) {
        const std::size_t c = at(1, j, k);
        const std::uint8_t* base = cur_.data() + c;
        const std::array<const std::uint8_t*, 7> rows = {base,      base - 1,  base + 1,
                                                         base - dy, base + dy, base - dz,
                                                         base + dz};
        if (erosion) {
          kern.and_rows(next_.data() + c, rows.data(), rows.size(), row_len);
        } else {
          kern.or_rows(next_.data() + c, rows.data(), rows.size(), row_len);
        }
      }
    }
    cur_.swap(next_);
  }

  std::int64_t margin_;
  Dims dims_;
  Dims padded_{};
  std::vector<std::uint8_t> cur_;
  std::vector<std::uint8_t> next_;
};

void check_iterations(int iterations) {
  if (iterations < 0) throw InputError("morphology iteration count must be >= 0");
}

}  // namespace

LabelVolume open3d(const LabelVolume& mask, int iterations) {
  check_iterations(iterations);
  PaddedMask work(mask, iterations);
  for (int n = 0; n < iterations; ++n) work.erode();
  for (int n = 0; n < iterations; ++n) work.dilate();
  return work.crop(mask.geometry());
}

LabelVolume close3d(const LabelVolume& mask, int iterations) {
  check_iterations(iterations);
  PaddedMask work(mask, iterations);
  for (int n = 0; n < iterations; ++n) work.dilate();
  for (int n = 0; n < iterations; ++n) work.erode();
  return work.crop(mask.geometry());
}

Components label_components(const LabelVolume& mask) {
  const Geometry& g = mask.geometry();
  Components out;
  out.labels.assign(mask.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < mask.size(); ++seed) {
    if (mask[seed] == 0.0f || out.labels[seed] != 0) continue;
    const auto label = static_cast<std::int32_t>(out.sizes.size() + 1);
    std::size_t size = 0;
    out.labels[seed] = label;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      ++size;
      const auto lin = static_cast<std::int64_t>(v);
      const std::int64_t i = lin % g.dims[0];
      const std::int64_t j = (lin / g.dims[0]) % g.dims[1];
      const std::int64_t k = lin / (g.dims[0] * g.dims[1]);
      for (std::int64_t dk = -1; dk <= 1; ++dk)
        for (std::int64_t dj = -1; dj <= 1; ++dj)
          for (std::int64_t di = -1; di <= 1; ++di) {
            if (!g.contains(i + di, j + dj, k + dk)) continue;
            const std::size_t u = g.index(i + di, j + dj, k + dk);
            if (mask[u] != 0.0f && out.labels[u] == 0) {
              out.labels[u] = label;
              stack.push_back(u);
            }
          }
    }
    out.sizes.push_back(size);
  }
  return out;
}

LabelVolume largest_component(const LabelVolume& mask) {
  const Components comps = label_components(mask);
  LabelVolume out(mask.geometry());
  if (comps.count() == 0) return out;

  const Geometry& g = mask.geometry();
  std::vector<std::array<double, 3>> centroid(comps.count(), {0.0, 0.0, 0.0});
  for (std::int64_t k = 0; k < g.dims[2]; ++k)
    for (std::int64_t j = 0; j < g.dims[1]; ++j)
      for (std::int64_t i = 0; i < g.dims[0]; ++i) {
        const std::int32_t l = comps.labels[g.index(i, j, k)];
        if (l == 0) continue;
        auto& c = centroid[static_cast<std::size_t>(l - 1)];
        c[0] += static_cast<double>(i);
        c[1] += static_cast<double>(j);
        c[2] += static_cast<double>(k);
      }

  // Labels are numbered by lowest linear index, so a strict comparison keeps
  // the earliest component on a full tie.
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < comps.count(); ++c) {
    const double n = static_cast<double>(comps.sizes[c]);
    double d2 = 0.0;
    for (int a = 0; a < 3; ++a) {
      const double center = static_cast<double>(g.dims[a] / 2);  // ROI click voxel
      const double dc = (centroid[c][a] / n - center) * (a == 0   ? g.spacing.x
                                                         : a == 1 ? g.spacing.y
                                                                  : g.spacing.z);
      d2 += dc * dc;
    }
    if (c == 0 || comps.sizes[c] > comps.sizes[best] ||
        (comps.sizes[c] == comps.sizes[best] && d2 < best_dist)) {
      best = c;
      best_dist = d2;
    }
  }
  const auto keep = static_cast<std::int32_t>(best + 1);
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (comps.labels[v] == keep) out.set(v, 1.0f);
  }
  return out;
}

}  // namespace surfseg
