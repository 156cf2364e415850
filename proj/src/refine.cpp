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

#include "surfseg/refine.hpp"

#include "surfseg/morphology.hpp"

namespace surfseg {

SuppressResult gmm_suppress(const ProbabilityVolume& prob, const LabelVolume& seg,
                            const ScalarVolume& intensity) {
  require_same_geometry(prob.geometry(), seg.geometry(), "probability vs segmentation");
  require_same_geometry(intensity.geometry(), seg.geometry(), "intensity vs segmentation");

  std::vector<double> samples;
  for (std::size_t v = 0; v < seg.size(); ++v) {
    if (seg[v] != 0.0f) samples.push_back(intensity[v]);
  }
  if (samples.size() < 8) {
    throw InputError("GMM suppression needs at least 8 foreground voxels, got " +
                     std::to_string(samples.size()));
  }

  SuppressResult out{prob, seg, {}};
  out.report.gmm = fit_gmm2(samples);
  const GmmFit& fit = out.report.gmm;
  out.report.condition_applied = fit.mu2 < fit.mu1 - fit.sigma1;
  out.report.components_before = count_components(seg);
  if (out.report.condition_applied) {
    for (std::size_t v = 0; v < seg.size(); ++v) {
      if (static_cast<double>(intensity[v]) < fit.mu2) {
        out.prob.set(v, 0.0f);
        if (out.seg[v] != 0.0f) {
          out.seg.set(v, 0.0f);
          ++out.report.voxels_zeroed;
        }
      }
    }
    out.report.components_after = count_components(out.seg);
  } else {
    out.report.components_after = out.report.components_before;
  }
  return out;
}

RefineResult refine_pipeline(const ProbabilityVolume& prob, const LabelVolume& seg,
                             const ScalarVolume& intensity, const RefineOptions& options) {
  SuppressResult suppressed = gmm_suppress(prob, seg, intensity);
  LabelVolume mask = open3d(suppressed.seg, options.open_iterations);
  mask = largest_component(mask);
  mask = close3d(mask, options.close_iterations);

  RefineResult out{std::move(mask), std::move(suppressed.prob), suppressed.report};
  out.report.components_after = count_components(out.mask);
  return out;
}

}  // namespace surfseg
