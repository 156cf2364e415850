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

#include <span>
#include <vector>

#include "surfseg/volume.hpp"

namespace surfseg {

/// Two-component univariate Gaussian mixture, ordered so mu1 >= mu2.
struct GmmFit {
  double mu1 = 0.0;
  double sigma1 = 0.0;
  double w1 = 0.5;
  double mu2 = 0.0;
  double sigma2 = 0.0;
  double w2 = 0.5;
  double loglik = 0.0;
  int iterations = 0;
  /// Log-likelihood of every parameter set visited, initial guess first.
  std::vector<double> loglik_trace;
};

struct GmmOptions {
  double tolerance = 1e-8;
  int max_iterations = 500;
  /// sigma floor as a fraction of the sample range
  double sigma_floor_fraction = 1e-6;
};

/// Raised when all samples are identical; a two-mode fit has no meaning then.
class DegenerateSamplesError : public InputError {
 public:
  using InputError::InputError;
};

/// Deterministic EM fit. Initialization splits the sorted samples at the
/// median: each half supplies one component's mean and variance, weights
/// start at 0.5. Iterates until the log-likelihood changes by less than
/// `tolerance` or `max_iterations` M-steps have run.
///
/// Throws InputError for fewer than 8 samples and DegenerateSamplesError
/// when every sample is equal.
GmmFit fit_gmm2(std::span<const double> samples, const GmmOptions& options = {});

}  // namespace surfseg
