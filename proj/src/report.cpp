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

#include "surfseg/report.hpp"

#include <set>
#include <string>

namespace surfseg {
namespace {

Json vec3(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

Vec3 read_vec3(const Json& j, const char* key) {
  if (!j.is_array() || j.size() != 3) {
    throw InputError(std::string("phantom spec: '") + key + "' must be a 3-element array");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

void to_json(Json& j, const GmmFit& fit) {
  j = Json{{"mu1", fit.mu1},       {"sigma1", fit.sigma1}, {"w1", fit.w1},
           {"mu2", fit.mu2},       {"sigma2", fit.sigma2}, {"w2", fit.w2},
           {"loglik", fit.loglik}, {"iterations", fit.iterations}};
}

void to_json(Json& j, const RefineReport& report) {
  j = report.gmm;
  j["condition_applied"] = report.condition_applied;
  j["voxels_zeroed"] = report.voxels_zeroed;
  j["components_before"] = report.components_before;
  j["components_after"] = report.components_after;
}

void to_json(Json& j, const SurfaceSolution& solution) {
  j = Json{{"delta", solution.delta},
           {"boundary_index", solution.boundary_index},
           {"total_cost", solution.total_cost}};
}

void to_json(Json& j, const EvalResult& eval) {
  j = Json{
      {"dsc", eval.dsc}, {"rvd", eval.rvd}, {"vol_seg", eval.vol_seg}, {"vol_ref", eval.vol_ref}};
}

void to_json(Json& j, const PipelineConfig& c) {
  j = Json{{"roi_size", c.roi_size},
           {"column_length", c.column_length},
           {"node_spacing_mm", c.node_spacing_mm},
           {"delta", c.delta},
           {"threshold", c.threshold},
           {"cost_mode", to_string(c.cost_mode)},
           {"column_mode", to_string(c.column_mode)},
           {"init_mode", to_string(c.init_mode)},
           {"sphere_radius_mm", c.sphere_radius_mm},
           {"open_iterations", c.open_iterations},
           {"close_iterations", c.close_iterations},
           {"refine", c.refine}};
}

void to_json(Json& j, const PhantomSpec& s) {
  j = Json{{"dims", s.dims},
           {"spacing", vec3(s.spacing)},
           {"shape", s.shape == ShapeKind::sphere ? "sphere" : "ellipsoid"},
           {"center", vec3(s.center)},
           {"radii", vec3(s.radii)},
           {"fg_mean", s.fg_mean},
           {"bg_mean", s.bg_mean},
           {"noise_sigma", s.noise_sigma},
           {"seed", s.seed}};
}

PhantomSpec phantom_spec_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("phantom spec must be a JSON object");
  static const std::set<std::string> known = {"dims",  "spacing", "shape",       "center",
                                              "radii", "radius",  "fg_mean",     "bg_mean",
                                              "noise_sigma", "seed", "tau", "prob_noise",
                                              "prob_seed", "distractor"};
  for (const auto& item : j.items()) {
    if (!known.contains(item.key()))
      throw InputError("phantom spec: unknown key '" + item.key() + "'");
  }
  PhantomSpec s;
  try {
    if (j.contains("dims")) s.dims = j["dims"].get<Dims>();
    if (j.contains("spacing")) s.spacing = read_vec3(j["spacing"], "spacing");
    if (j.contains("shape")) {
      const std::string shape = j["shape"].get<std::string>();
      if (shape == "sphere") s.shape = ShapeKind::sphere;
      else if (shape == "ellipsoid") s.shape = ShapeKind::ellipsoid;
      else throw InputError("phantom spec: unknown shape '" + shape + "'");
    }
    if (j.contains("center")) s.center = read_vec3(j["center"], "center");
    if (j.contains("radii")) s.radii = read_vec3(j["radii"], "radii");
    if (j.contains("radius")) {
      const double r = j["radius"].get<double>();
      s.radii = {r, r, r};
    }
    if (j.contains("fg_mean")) s.fg_mean = j["fg_mean"].get<double>();
    if (j.contains("bg_mean")) s.bg_mean = j["bg_mean"].get<double>();
    if (j.contains("noise_sigma")) s.noise_sigma = j["noise_sigma"].get<double>();
    if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("phantom spec: ") + e.what());
  }
  s.validate();
  return s;
}

Json pipeline_report(const PipelineConfig& config, const PipelineResult& r) {
  Json j;
  j["config"] = config;
  j["roi"] =
      Json{{"dims", r.roi.dims}, {"spacing", vec3(r.roi.spacing)}, {"origin", vec3(r.roi.origin)}};
  j["refine"] = r.refine ? Json(*r.refine) : Json(nullptr);
  j["mesh"] = Json{{"vertices", r.mesh_vertices},
                   {"triangles", r.mesh_triangles},
                   {"shells", r.shells},
                   {"components_skipped", r.components_skipped}};
  j["min_column_distance_mm"] = r.min_column_distance;
  j["flow"] = r.flow;
  j["solution"] = r.solution;
  j["ambiguous_voxels"] = r.ambiguous_voxels;
  j["foreground_voxels"] = count_foreground(r.mask);
  j["timings_ms"] = r.timings_ms;
  return j;
}

}  // namespace surfseg
