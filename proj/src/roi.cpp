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

#include "surfseg/roi.hpp"

#include <algorithm>

namespace surfseg {

void validate_roi(const RoiSpec& roi, const Geometry& geometry) {
  if (roi.size < 4 || roi.size % 2 != 0) {
    throw InputError("ROI size must be even and >= 4, got " + std::to_string(roi.size));
  }
  if (!geometry.contains(roi.center[0], roi.center[1], roi.center[2])) {
    throw InputError("ROI center (" + std::to_string(roi.center[0]) + "," +
                     std::to_string(roi.center[1]) + "," + std::to_string(roi.center[2]) +
                     ") is outside the volume");
  }
}

Geometry roi_geometry(const RoiSpec& roi, const Geometry& source) {
  validate_roi(roi, source);
  const std::int64_t half = roi.size / 2;
  Geometry out;
  out.dims = {roi.size, roi.size, roi.size};
  out.spacing = source.spacing;
  out.origin = source.voxel_center(roi.center[0] - half, roi.center[1] - half,
                                   roi.center[2] - half);
  return out;
}

template <VolumeKind Kind>
Volume<Kind> crop_roi(const Volume<Kind>& volume, const RoiSpec& roi) {
  const Geometry& src = volume.geometry();
  Volume<Kind> out(roi_geometry(roi, src));
  const std::int64_t half = roi.size / 2;
  for (std::int64_t k = 0; k < roi.size; ++k) {
    const std::int64_t sk = std::clamp<std::int64_t>(roi.center[2] - half + k, 0, src.dims[2] - 1);
    for (std::int64_t j = 0; j < roi.size; ++j) {
      const std::int64_t sj =
          std::clamp<std::int64_t>(roi.center[1] - half + j, 0, src.dims[1] - 1);
      for (std::int64_t i = 0; i < roi.size; ++i) {
        const std::int64_t si =
            std::clamp<std::int64_t>(roi.center[0] - half + i, 0, src.dims[0] - 1);
        out.set(i, j, k, volume(si, sj, sk));
      }
    }
  }
  return out;
}

template ScalarVolume crop_roi(const ScalarVolume&, const RoiSpec&);
template ProbabilityVolume crop_roi(const ProbabilityVolume&, const RoiSpec&);
template LabelVolume crop_roi(const LabelVolume&, const RoiSpec&);

}  // namespace surfseg
