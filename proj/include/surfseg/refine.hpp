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

#include "surfseg/gmm.hpp"
#include "surfseg/volume.hpp"

namespace surfseg {

struct RefineReport {
  GmmFit gmm;
  /// mu2 < mu1 - sigma1
  bool condition_applied = false;
  /// Foreground voxels removed by the intensity test.
  std::size_t voxels_zeroed = 0;
  std::size_t components_before = 0;
  std::size_t components_after = 0;
};

struct SuppressResult {
  ProbabilityVolume prob;
  LabelVolume seg;
  RefineReport report;
};

/// Fits a two-component GMM to the intensities under `seg`. When the darker
/// mode sits more than one sigma below the brighter one, every voxel darker
/// than mu2 gets probability 0 and label 0; otherwise the inputs pass through.
/// Component counts in the report refer to `seg` before and after.
SuppressResult gmm_suppress(const ProbabilityVolume& prob, const LabelVolume& seg,
                            const ScalarVolume& intensity);

struct RefineOptions {
  int open_iterations = 2;
  int close_iterations = 1;
};

struct RefineResult {
  LabelVolume mask;
  ProbabilityVolume prob;
  RefineReport report;
};

/// GMM suppression, opening, largest component, closing, in that order.
/// Morphology only touches the mask. components_before counts the input
/// segmentation, components_after the final mask.
RefineResult refine_pipeline(const ProbabilityVolume& prob, const LabelVolume& seg,
                             const ScalarVolume& intensity, const RefineOptions& options = {});

}  // namespace surfseg
