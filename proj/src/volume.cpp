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

#include "surfseg/volume.hpp"

#include <cmath>

namespace surfseg {

void Geometry::validate() const {
  for (int a = 0; a < 3; ++a) {
    if (dims[a] < 1) throw InputError("volume dims must all be >= 1");
  }
  if (!(spacing.x > 0.0 && spacing.y > 0.0 && spacing.z > 0.0) || !is_finite(spacing)) {
    throw InputError("volume spacing must be finite and > 0");
  }
  if (!is_finite(origin)) throw InputError("volume origin must be finite");
}

const char* to_string(VolumeKind kind) {
  switch (kind) {
    case VolumeKind::scalar:
      return "scalar";
    case VolumeKind::probability:
      return "probability";
    case VolumeKind::label:
      return "label";
  }
  return "unknown";
}

template <VolumeKind Kind>
void Volume<Kind>::check_values() const {
  if constexpr (Kind == VolumeKind::probability) {
    for (std::size_t n = 0; n < data_.size(); ++n) {
      const float v = data_[n];
      // NaN fails both comparisons.
      if (!(v >= 0.0f && v <= 1.0f)) {
        throw InputError("probability value " + std::to_string(v) + " at voxel " +
                         std::to_string(n) + " is outside [0,1]");
      }
    }
  } else if constexpr (Kind == VolumeKind::label) {
    for (std::size_t n = 0; n < data_.size(); ++n) {
      const float v = data_[n];
      if (v != 0.0f && v != 1.0f) {
        throw InputError("label value " + std::to_string(v) + " at voxel " + std::to_string(n) +
                         " is not 0 or 1");
      }
    }
  } else {
    for (std::size_t n = 0; n < data_.size(); ++n) {
      if (!std::isfinite(data_[n])) {
        throw InputError("non-finite intensity at voxel " + std::to_string(n));
      }
    }
  }
}

template class Volume<VolumeKind::scalar>;
template class Volume<VolumeKind::probability>;
template class Volume<VolumeKind::label>;

std::size_t count_foreground(const LabelVolume& label) {
  std::size_t count = 0;
  for (float v : label.values()) count += v != 0.0f;
  return count;
}

LabelVolume threshold(const ProbabilityVolume& prob, double threshold) {
  LabelVolume out(prob.geometry());
  for (std::size_t n = 0; n < prob.size(); ++n) {
    out.set(n, prob[n] >= threshold ? 1.0f : 0.0f);
  }
  return out;
}

void require_same_geometry(const Geometry& a, const Geometry& b, const char* what) {
  if (a.dims != b.dims || a.spacing != b.spacing || a.origin != b.origin) {
    throw InputError(std::string("geometry mismatch: ") + what);
  }
}

}  // namespace surfseg
