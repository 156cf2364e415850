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

#include <doctest.h>

#include <filesystem>

#include "surfseg/metaimage.hpp"
#include "surfseg/metrics.hpp"
#include "surfseg/morphology.hpp"
#include "surfseg/phantom.hpp"
#include "surfseg/pipeline.hpp"
#include "surfseg/report.hpp"

using namespace surfseg;
namespace fs = std::filesystem;

namespace {

struct Case {
  Phantom phantom;
  ProbabilityVolume prob;
};

const Case& sphere_case() {
  static const Case c = [] {
    PhantomSpec s;
    Phantom ph = make_phantom(s);
    ProbabilityVolume p = simulate_prob(ph.label, 1.0, 0.05, 2);
    return Case{std::move(ph), std::move(p)};
  }();
  return c;
}

constexpr std::array<std::int64_t, 3> kCenter{16, 16, 16};

}  // namespace

TEST_CASE("pipeline on the sphere phantom") {
  const Case& c = sphere_case();
  const PipelineConfig config;
  const PipelineResult r = run_pipeline(c.phantom.intensity, c.prob, kCenter, config);
  const LabelVolume ref = crop_roi(c.phantom.label, RoiSpec{kCenter, 32});

  CHECK(r.mask.geometry() == ref.geometry());
  CHECK(dsc(r.mask, ref) > 0.85);
  CHECK(r.refine.has_value());
  CHECK(r.shells == 1);
  CHECK(r.mesh_vertices > 100);
  CHECK(r.solution.boundary_index.size() == r.mesh_vertices);
  CHECK(r.ambiguous_voxels == 0);
  CHECK(r.min_column_distance > 1e-9);
  for (const char* s : {"config", "roi", "threshold", "refine", "mesh", "columns", "costs", "graph",
                        "solve", "voxelize"}) {
    CHECK_MESSAGE(r.timings_ms.count(s) == 1, s);
  }

  const Json report = pipeline_report(config, r);
  CHECK(report.contains("config"));
  CHECK(report["config"]["delta"] == 2);

  SUBCASE("deterministic") {
    const PipelineResult again = run_pipeline(c.phantom.intensity, c.prob, kCenter, config);
    CHECK(again.mask == r.mask);
    CHECK(again.solution.boundary_index == r.solution.boundary_index);
    CHECK(again.flow == r.flow);
  }
}

TEST_CASE("pipeline variants run") {
  const Case& c = sphere_case();
  const LabelVolume ref = crop_roi(c.phantom.label, RoiSpec{kCenter, 32});

  SUBCASE("sphere init with gradient costs") {
    PipelineConfig config;
    config.init_mode = InitMode::sphere;
    config.cost_mode = CostMode::gradient;
    const PipelineResult r = run_pipeline(c.phantom.intensity, c.prob, kCenter, config);
    CHECK(count_foreground(r.mask) > 0);
    CHECK(r.shells == 1);
  }
  SUBCASE("normal columns") {
    PipelineConfig config;
    config.column_mode = ColumnMode::normal;
    const PipelineResult r = run_pipeline(c.phantom.intensity, c.prob, kCenter, config);
    CHECK(dsc(r.mask, ref) > 0.8);
  }
  SUBCASE("no refinement") {
    PipelineConfig config;
    config.refine = false;
    const PipelineResult r = run_pipeline(c.phantom.intensity, c.prob, kCenter, config);
    CHECK_FALSE(r.refine.has_value());
    CHECK(r.timings_ms.count("refine") == 0);
    CHECK(dsc(r.mask, ref) > 0.8);
  }
}

TEST_CASE("pipeline errors carry the stage") {
  const Case& c = sphere_case();
  SUBCASE("config") {
    PipelineConfig config;
    config.delta = -1;
    try {
      run_pipeline(c.phantom.intensity, c.prob, kCenter, config);
      FAIL("expected StageError");
    } catch (const StageError& e) {
      CHECK(e.stage() == "config");
      CHECK(e.input_error());
    }
  }
  SUBCASE("empty threshold") {
    PipelineConfig config;
    const ProbabilityVolume zero(c.prob.geometry());
    try {
      run_pipeline(c.phantom.intensity, zero, kCenter, config);
      FAIL("expected StageError");
    } catch (const StageError& e) {
      CHECK(e.input_error());
    }
  }
  SUBCASE("missing file") {
    const fs::path dir = fs::temp_directory_path() / "surfseg_pipeline_test";
    fs::create_directories(dir);
    write_metaimage(c.phantom.intensity, dir / "intensity.mha");
    try {
      run_pipeline_files(dir / "intensity.mha", dir / "missing.mha", kCenter, {}, dir / "o.mha");
      FAIL("expected StageError");
    } catch (const StageError& e) {
      CHECK(e.stage() == "load");
      CHECK(e.input_error());
    }
    fs::remove_all(dir);
  }
}
