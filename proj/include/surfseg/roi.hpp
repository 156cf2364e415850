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

#include "surfseg/volume.hpp"

namespace surfseg {

/// Cubic region of interest around a clicked voxel. The center voxel lands
/// at index size/2 of the cropped cube.
struct RoiSpec {
  std::array<std::int64_t, 3> center{0, 0, 0};
  std::int64_t size = 32;
};

/// Throws InputError unless size >= 4, size is even and center lies inside `geometry`.
void validate_roi(const RoiSpec& roi, const Geometry& geometry);

/// Geometry of the cropped cube; the origin keeps world coordinates aligned
/// with the source grid.
Geometry roi_geometry(const RoiSpec& roi, const Geometry& source);

/// Index-shifted copy; source indices outside the volume are clamped to the
/// nearest voxel (edge replication).
template <VolumeKind Kind>
Volume<Kind> crop_roi(const Volume<Kind>& volume, const RoiSpec& roi);

}  // namespace surfseg
