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

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "surfseg/columns.hpp"
#include "surfseg/refine.hpp"
#include "surfseg/roi.hpp"
#include "surfseg/surface_solution.hpp"
#include "surfseg/volume.hpp"

namespace surfseg {

enum class CostMode { eq1, gradient };
enum class InitMode { refined_mask, sphere };

const char* to_string(CostMode mode);
const char* to_string(InitMode mode);
CostMode parse_cost_mode(std::string_view text);
InitMode parse_init_mode(std::string_view text);

struct PipelineConfig {
  std::int64_t roi_size = 32;
  int column_length = 50;
  double node_spacing_mm = 0.5;
  int delta = 2;
  double threshold = 0.5;
  CostMode cost_mode = CostMode::eq1;
  ColumnMode column_mode = ColumnMode::elf;
  InitMode init_mode = InitMode::refined_mask;
  double sphere_radius_mm = 8.0;
  int open_iterations = 2;
  int close_iterations = 1;
  /// Off: the thresholded mask goes straight to meshing. Each component with
  /// at least 8 voxels gets its own closed shell.
  bool refine = true;

  void validate() const;
};

/// An error tagged with the pipeline stage that raised it.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, std::string message, bool input_error)
      : std::runtime_error(stage + ": " + message),
        stage_(std::move(stage)),
        input_error_(input_error) {}

  const std::string& stage() const { return stage_; }
  /// True for bad input, false for internal failures.
  bool input_error() const { return input_error_; }

 private:
  std::string stage_;
  bool input_error_;
};

struct PipelineResult {
  Geometry roi;
  LabelVolume initial_mask;
  LabelVolume mask;
  std::optional<RefineReport> refine;
  SurfaceSolution solution;
  /// Column pairs the smoothness bound applies to.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> column_adjacency;
  std::size_t mesh_vertices = 0;
  std::size_t mesh_triangles = 0;
  std::size_t shells = 0;
  /// Thresholded components too small to mesh (refinement off only).
  std::size_t components_skipped = 0;
  double min_column_distance = 0.0;
  std::int64_t flow = 0;
  std::size_t ambiguous_voxels = 0;
  /// Wall time per stage, ms.
  std::map<std::string, double> timings_ms;
};

/// Runs the pipeline on in-memory volumes. `center` is a voxel index of the
/// full volumes. Throws StageError.
PipelineResult run_pipeline(const ScalarVolume& intensity, const ProbabilityVolume& prob,
                            const std::array<std::int64_t, 3>& center,
                            const PipelineConfig& config);

/// File wrapper: reads both volumes (stage "load"), runs the pipeline and
/// writes the ROI mask as MET_UCHAR (stage "write").
PipelineResult run_pipeline_files(const std::filesystem::path& intensity_path,
                                  const std::filesystem::path& prob_path,
                                  const std::array<std::int64_t, 3>& center,
                                  const PipelineConfig& config,
                                  const std::filesystem::path& output_path);

}  // namespace surfseg
