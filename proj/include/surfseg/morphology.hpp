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

// Binary morphology with the 6-neighbour cross and connected components.
//
// The mask is taken to be background everywhere outside the volume.
// Intermediate results of a compound operation live on that unbounded
// domain (the volume padded by `iterations` voxels), so closing may grow
// into the margin before eroding back; only the final result is cropped.

#pragma once

#include <cstdint>
#include <vector>

#include "surfseg/volume.hpp"

namespace surfseg {

/// `iterations` erosions followed by `iterations` dilations.
LabelVolume open3d(const LabelVolume& mask, int iterations);

/// `iterations` dilations followed by `iterations` erosions.
LabelVolume close3d(const LabelVolume& mask, int iterations);

/// 26-connected component labelling. labels[i] is 0 for background and
/// 1..count otherwise, numbered in order of each component's lowest linear index.
struct Components {
  std::vector<std::int32_t> labels;
  std::vector<std::size_t> sizes;  // sizes[c - 1] for label c
  std::size_t count() const { return sizes.size(); }
};

Components label_components(const LabelVolume& mask);

inline std::size_t count_components(const LabelVolume& mask) {
  return label_components(mask).count();
}

/// Keeps the component with the most voxels. Ties go to the component whose
/// centroid is nearest the center voxel (index dims/2, the ROI click point),
/// then to the lowest linear index.
LabelVolume largest_component(const LabelVolume& mask);

}  // namespace surfseg
