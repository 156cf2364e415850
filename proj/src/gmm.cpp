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

#include "surfseg/gmm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace surfseg {
namespace {

struct Component {
  double mean = 0.0;
  double var = 0.0;
  double weight = 0.5;
};

Component moments(std::span<const double> xs, double var_floor) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size());
  return {mean, std::max(var, var_floor), 0.5};
}

double log_normal(double x, const Component& c) {
  const double d = x - c.mean;
  return -0.5 * (std::log(2.0 * std::numbers::pi * c.var) + d * d / c.var);
}

}  // namespace

GmmFit fit_gmm2(std::span<const double> samples, const GmmOptions& options) {
  if (samples.size() < 8) {
    throw InputError("GMM fit needs at least 8 samples, got " + std::to_string(samples.size()));
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double range = sorted.back() - sorted.front();
  if (!(range > 0.0)) {
    throw DegenerateSamplesError("GMM fit: all samples are identical");
  }
  const double sigma_floor = options.sigma_floor_fraction * range;
  const double var_floor = sigma_floor * sigma_floor;

  const std::size_t n = sorted.size();
  const std::size_t half = n / 2;
  // Component 0 starts on the upper half.
  Component c[2] = {moments(std::span(sorted).subspan(half), var_floor),
                    moments(std::span(sorted).first(half), var_floor)};

  GmmFit fit;
  std::vector<double> resp(n);
  double previous = 0.0;
  for (int step = 0;; ++step) {
    // E-step: responsibilities of component 0 and the log-likelihood of c.
    double loglik = 0.0;
    const double log_w0 = std::log(c[0].weight);
    const double log_w1 = std::log(c[1].weight);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = log_w0 + log_normal(samples[i], c[0]);
      const double b = log_w1 + log_normal(samples[i], c[1]);
      const double m = std::max(a, b);
      const double lse = m + std::log(std::exp(a - m) + std::exp(b - m));
      loglik += lse;
      resp[i] = std::exp(a - lse);
    }
    fit.loglik_trace.push_back(loglik);
    fit.loglik = loglik;
    if (step > 0 && std::abs(loglik - previous) < options.tolerance) break;
    if (step >= options.max_iterations) break;
    previous = loglik;

    // M-step.
    double n0 = 0.0;
    double s0 = 0.0;
    double s1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      n0 += resp[i];
      s0 += resp[i] * samples[i];
      s1 += (1.0 - resp[i]) * samples[i];
    }
    const double n1 = static_cast<double>(n) - n0;
    if (!(n0 > 0.0) || !(n1 > 0.0)) {
      throw InternalError("GMM fit: a mixture component lost all support");
    }
    c[0].mean = s0 / n0;
    c[1].mean = s1 / n1;
    double v0 = 0.0;
    double v1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d0 = samples[i] - c[0].mean;
      const double d1 = samples[i] - c[1].mean;
      v0 += resp[i] * d0 * d0;
      v1 += (1.0 - resp[i]) * d1 * d1;
    }
    c[0].var = std::max(v0 / n0, var_floor);
    c[1].var = std::max(v1 / n1, var_floor);
    c[0].weight = n0 / static_cast<double>(n);
    c[1].weight = 1.0 - c[0].weight;
    fit.iterations = step + 1;
  }

  if (c[0].mean < c[1].mean) std::swap(c[0], c[1]);
  fit.mu1 = c[0].mean;
  fit.sigma1 = std::sqrt(c[0].var);
  fit.w1 = c[0].weight;
  fit.mu2 = c[1].mean;
  fit.sigma2 = std::sqrt(c[1].var);
  fit.w2 = 1.0 - fit.w1;
  return fit;
}

}  // namespace surfseg
