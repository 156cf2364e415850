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

#include "surfseg/pipeline.hpp"

#include <chrono>
#include <exception>
#include <utility>

#include "surfseg/costs.hpp"
#include "surfseg/flow.hpp"
#include "surfseg/mesh.hpp"
#include "surfseg/metaimage.hpp"
#include "surfseg/morphology.hpp"
#include "surfseg/voxelize.hpp"

namespace surfseg {
namespace {

constexpr int kSphereSubdivisions = 3;

// Runs `fn` as stage `name`, recording its wall time and tagging failures.
template <typename Fn>
auto stage(PipelineResult& result, const char* name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  const auto record = [&] {
    result.timings_ms[name] +=
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  };
  try {
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      record();
    } else {
      auto value = fn();
      record();
      return value;
    }
  } catch (const StageError&) {
    throw;
  } catch (const InputError& e) {
    throw StageError(name, e.what(), true);
  } catch (const std::exception& e) {
    throw StageError(name, e.what(), false);
  }
}

SurfaceMesh mesh_components(const LabelVolume& mask, std::size_t& shells, std::size_t& skipped) {
  const Components comps = label_components(mask);
  if (comps.count() <= 1) {
    shells = 1;
    return extract_mesh(mask);
  }
  std::vector<SurfaceMesh> parts;
  for (std::size_t c = 0; c < comps.count(); ++c) {
    if (comps.sizes[c] < 8) {
      ++skipped;
      continue;
    }
    LabelVolume part(mask.geometry());
    for (std::size_t i = 0; i < comps.labels.size(); ++i) {
      if (comps.labels[i] == static_cast<std::int32_t>(c + 1)) part.set(i, 1.0f);
    }
    parts.push_back(extract_mesh(part));
  }
  if (parts.empty()) throw InputError("no component large enough to mesh");
  shells = parts.size();
  return merge_meshes(parts);
}

}  // namespace

const char* to_string(CostMode mode) { return mode == CostMode::eq1 ? "eq1" : "gradient"; }
const char* to_string(InitMode mode) {
  return mode == InitMode::sphere ? "sphere" : "refined-mask";
}

CostMode parse_cost_mode(std::string_view text) {
  if (text == "eq1") return CostMode::eq1;
  if (text == "gradient") return CostMode::gradient;
  throw InputError("unknown cost mode '" + std::string(text) + "'");
}

InitMode parse_init_mode(std::string_view text) {
  if (text == "refined-mask") return InitMode::refined_mask;
  if (text == "sphere") return InitMode::sphere;
  throw InputError("unknown init mode '" + std::string(text) + "'");
}

void PipelineConfig::validate() const {
  if (roi_size <= 0) throw InputError("roi_size must be > 0");
  if (column_length < 2) throw InputError("column_length must be >= 2");
  if (!(node_spacing_mm > 0.0)) throw InputError("node_spacing_mm must be > 0");
  if (delta < 0) throw InputError("delta must be >= 0");
  if (!(threshold > 0.0 && threshold < 1.0)) throw InputError("threshold must be in (0, 1)");
  if (!(sphere_radius_mm > 0.0)) throw InputError("sphere radius must be > 0");
  if (open_iterations < 0 || close_iterations < 0) {
    throw InputError("morphology iterations must be >= 0");
  }
}

PipelineResult run_pipeline(const ScalarVolume& intensity, const ProbabilityVolume& prob,
                            const std::array<std::int64_t, 3>& center,
                            const PipelineConfig& config) {
  PipelineResult r;
  stage(r, "config", [&] { config.validate(); });
  const RoiSpec roi{center, config.roi_size};
  auto [image, probability] = stage(r, "roi", [&] {
    require_same_geometry(intensity.geometry(), prob.geometry(), "intensity and probability");
    validate_roi(roi, intensity.geometry());
    return std::pair{crop_roi(intensity, roi), crop_roi(prob, roi)};
  });
  r.roi = image.geometry();
  r.initial_mask = stage(r, "threshold", [&] { return threshold(probability, config.threshold); });

  SurfaceMesh mesh;
  if (config.init_mode == InitMode::sphere) {
    mesh = stage(r, "mesh", [&] {
      const std::int64_t h = config.roi_size / 2;
      return sphere_mesh(r.roi.voxel_center(h, h, h), config.sphere_radius_mm,
                         kSphereSubdivisions);
    });
    r.shells = 1;
  } else {
    LabelVolume seed = r.initial_mask;
    if (config.refine) {
      RefineResult refined = stage(r, "refine", [&] {
        return refine_pipeline(probability, r.initial_mask, image,
                               {config.open_iterations, config.close_iterations});
      });
      seed = std::move(refined.mask);
      probability = std::move(refined.prob);
      r.refine = refined.report;
    }
    mesh = stage(r, "mesh",
                 [&] { return mesh_components(seed, r.shells, r.components_skipped); });
  }
  r.mesh_vertices = mesh.vertices.size();
  r.mesh_triangles = mesh.triangles.size();

  const ColumnSet columns = stage(r, "columns", [&] {
    ColumnOptions options;
    options.length = config.column_length;
    options.node_spacing = config.node_spacing_mm;
    options.mode = config.column_mode;
    return build_columns(mesh, options);
  });
  r.min_column_distance = stage(
      r, "columns", [&] { return min_intercolumn_distance(columns, config.node_spacing_mm); });

  const ColumnGraph graph = stage(r, "costs", [&] {
    return config.cost_mode == CostMode::eq1 ? eq1_costs(columns, probability, config.delta)
                                             : gradient_costs(columns, image, config.delta);
  });
  const FlowNetwork network = stage(r, "graph", [&] { return build_flow_network(graph); });
  r.solution = stage(r, "solve", [&] {
    const MaxFlowResult flow = max_flow(network);
    r.flow = flow.flow;
    SurfaceSolution s = extract_surface(flow.source_side, graph);
    check_smoothness(s, graph);
    return s;
  });
  r.column_adjacency = columns.adjacency;
  VoxelizeResult vox =
      stage(r, "voxelize", [&] { return voxelize(r.solution, columns, mesh, r.roi); });
  r.mask = std::move(vox.mask);
  r.ambiguous_voxels = vox.ambiguous_voxels;
  return r;
}

PipelineResult run_pipeline_files(const std::filesystem::path& intensity_path,
                                  const std::filesystem::path& prob_path,
                                  const std::array<std::int64_t, 3>& center,
                                  const PipelineConfig& config,
                                  const std::filesystem::path& output_path) {
  PipelineResult scratch;
  auto [intensity, prob] = stage(scratch, "load", [&] {
    return std::pair{read_scalar_volume(intensity_path), read_probability_volume(prob_path)};
  });
  PipelineResult r = run_pipeline(intensity, prob, center, config);
  r.timings_ms["load"] = scratch.timings_ms["load"];
  stage(r, "write", [&] { write_metaimage(r.mask, output_path); });
  return r;
}

}  // namespace surfseg
