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

#include <cstdint>
#include <vector>

#include "surfseg/volume.hpp"

namespace surfseg {

/// Counter-based generator: every draw is a pure function of (seed, counter).
namespace counter_rng {
std::uint64_t mix(std::uint64_t seed, std::uint64_t counter);
/// Uniform in the open interval (0, 1).
double uniform(std::uint64_t seed, std::uint64_t counter);
/// Standard normal from Box-Muller on counters 2n and 2n + 1.
double normal(std::uint64_t seed, std::uint64_t n);
}  // namespace counter_rng

enum class ShapeKind { sphere, ellipsoid };

struct PhantomSpec {
  Dims dims{32, 32, 32};
  Vec3 spacing{1.0, 1.0, 1.0};
  ShapeKind shape = ShapeKind::sphere;
  /// World coordinates; the volume origin is (0, 0, 0).
  Vec3 center{16.0, 16.0, 16.0};
  /// For spheres only radii.x is used.
  Vec3 radii{8.0, 8.0, 8.0};
  double fg_mean = 180.0;
  double bg_mean = 60.0;
  double noise_sigma = 10.0;
  std::uint64_t seed = 1;

  Geometry geometry() const { return {dims, spacing, {0.0, 0.0, 0.0}}; }
  Vec3 effective_radii() const {
    return shape == ShapeKind::sphere ? Vec3{radii.x, radii.x, radii.x} : radii;
  }
  void validate() const;
};

struct Phantom {
  ScalarVolume intensity;
  LabelVolume label;
};

Phantom make_phantom(const PhantomSpec& spec);

/// 1 / (1 + exp(d / tau)).
double sigmoid_prob(double signed_distance, double tau);

/// Signed distance (mm) of every voxel center to the label boundary,
/// negative inside: -(D - s/2) for foreground and +(D - s/2) for background,
/// where D is the exact distance to the nearest voxel of the other class and
/// s the smallest spacing. Infinite when the other class is absent.
/// x-fastest, like volume data.
std::vector<double> signed_distance(const LabelVolume& label);

/// clamp(sigmoid_prob(d, tau) + N(0, noise_sigma), 0, 1).
ProbabilityVolume simulate_prob(const LabelVolume& label, double tau, double noise_sigma,
                                std::uint64_t seed);

struct DistractorSpec {
  /// From the centroid of the main label (mm).
  Vec3 offset{12.5, 0.0, 0.0};
  double radius = 2.5;
  double intensity_mean = 40.0;
  double noise_sigma = 0.0;
  std::uint64_t seed = 2;
};

struct DistractorResult {
  ScalarVolume intensity;
  /// The distractor ball alone.
  LabelVolume label;
};

/// Paints a ball into the intensity volume. Throws InputError when the ball
/// comes within 2 mm of the main label.
DistractorResult add_distractor(const ScalarVolume& intensity, const LabelVolume& label,
                                const DistractorSpec& spec);

}  // namespace surfseg
