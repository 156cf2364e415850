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

#include <json.hpp>

#include "surfseg/gmm.hpp"
#include "surfseg/metrics.hpp"
#include "surfseg/phantom.hpp"
#include "surfseg/pipeline.hpp"
#include "surfseg/refine.hpp"
#include "surfseg/surface_solution.hpp"

namespace surfseg {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const GmmFit& fit);
void to_json(Json& j, const RefineReport& report);
/// {"delta", "boundary_index", "total_cost"}; indices are 0-based.
void to_json(Json& j, const SurfaceSolution& solution);
void to_json(Json& j, const EvalResult& eval);
void to_json(Json& j, const PipelineConfig& config);
void to_json(Json& j, const PhantomSpec& spec);

/// Missing keys keep their defaults; unknown keys are rejected.
PhantomSpec phantom_spec_from_json(const Json& j);

/// Config, refine report, solution, diagnostics and timings.
Json pipeline_report(const PipelineConfig& config, const PipelineResult& result);

}  // namespace surfseg
