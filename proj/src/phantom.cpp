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

#include "surfseg/phantom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace surfseg {
namespace counter_rng {

std::uint64_t mix(std::uint64_t seed, std::uint64_t counter) {
  // splitmix64 finalizer over a Weyl sequence position.
  std::uint64_t z = seed + (counter + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform(std::uint64_t seed, std::uint64_t counter) {
  return (static_cast<double>(mix(seed, counter) >> 11) + 0.5) * 0x1.0p-53;
}

double normal(std::uint64_t seed, std::uint64_t n) {
  const double u1 = uniform(seed, 2 * n);
  const double u2 = uniform(seed, 2 * n + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace counter_rng

namespace {

double min_spacing(const Geometry& g) { return std::min({g.spacing.x, g.spacing.y, g.spacing.z}); }

bool is_boundary(const LabelVolume& label, std::int64_t i, std::int64_t j, std::int64_t k) {
  const float own = label(i, j, k);
  static constexpr int kOffsets[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                         {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  const Geometry& g = label.geometry();
  for (const auto& o : kOffsets) {
    const std::int64_t a = i + o[0];
    const std::int64_t b = j + o[1];
    const std::int64_t c = k + o[2];
    if (g.contains(a, b, c) && label(a, b, c) != own) return true;
  }
  return false;
}

}  // namespace

void PhantomSpec::validate() const {
  geometry().validate();
  const Vec3 r = effective_radii();
  if (!(r.x > 0.0 && r.y > 0.0 && r.z > 0.0)) throw InputError("phantom radii must be > 0");
  if (!(fg_mean > bg_mean)) throw InputError("phantom needs fg_mean > bg_mean");
  if (!(noise_sigma >= 0.0)) throw InputError("phantom noise_sigma must be >= 0");
  const Geometry g = geometry();
  const Vec3 far = g.voxel_center(dims[0] - 1, dims[1] - 1, dims[2] - 1);
  if (center.x - r.x < 0.0 || center.y - r.y < 0.0 || center.z - r.z < 0.0 ||
      center.x + r.x > far.x || center.y + r.y > far.y || center.z + r.z > far.z) {
    throw InputError("phantom shape does not fit inside the volume");
  }
}

Phantom make_phantom(const PhantomSpec& spec) {
  spec.validate();
  const Geometry g = spec.geometry();
  const Vec3 r = spec.effective_radii();
  Phantom out{ScalarVolume(g), LabelVolume(g)};
  for (std::int64_t k = 0; k < g.dims[2]; ++k) {
    for (std::int64_t j = 0; j < g.dims[1]; ++j) {
      for (std::int64_t i = 0; i < g.dims[0]; ++i) {
        const Vec3 d = g.voxel_center(i, j, k) - spec.center;
        const double e = (d.x / r.x) * (d.x / r.x) + (d.y / r.y) * (d.y / r.y) +
                         (d.z / r.z) * (d.z / r.z);
        const bool inside = e <= 1.0;
        const std::size_t idx = g.index(i, j, k);
        double value = inside ? spec.fg_mean : spec.bg_mean;
        if (spec.noise_sigma > 0.0) value += spec.noise_sigma * counter_rng::normal(spec.seed, idx);
        out.intensity.set(idx, static_cast<float>(value));
        out.label.set(idx, inside ? 1.0f : 0.0f);
      }
    }
  }
  return out;
}

double sigmoid_prob(double signed_distance, double tau) {
  if (!(tau > 0.0)) throw InputError("tau must be > 0");
  return 1.0 / (1.0 + std::exp(signed_distance / tau));
}

std::vector<double> signed_distance(const LabelVolume& label) {
  const Geometry& g = label.geometry();
  std::vector<Vec3> boundary[2];
  for (std::int64_t k = 0; k < g.dims[2]; ++k) {
    for (std::int64_t j = 0; j < g.dims[1]; ++j) {
      for (std::int64_t i = 0; i < g.dims[0]; ++i) {
        if (is_boundary(label, i, j, k)) {
          boundary[label(i, j, k) != 0.0f ? 1 : 0].push_back(g.voxel_center(i, j, k));
        }
      }
    }
  }
  const double half = 0.5 * min_spacing(g);
  std::vector<double> out(g.voxel_count());
  for (std::int64_t k = 0; k < g.dims[2]; ++k) {
    for (std::int64_t j = 0; j < g.dims[1]; ++j) {
      for (std::int64_t i = 0; i < g.dims[0]; ++i) {
        const bool inside = label(i, j, k) != 0.0f;
        const std::vector<Vec3>& other = boundary[inside ? 0 : 1];
        const Vec3 p = g.voxel_center(i, j, k);
        double best = std::numeric_limits<double>::infinity();
        for (const Vec3& q : other) {
          const Vec3 d = q - p;
          best = std::min(best, dot(d, d));
        }
        const double magnitude = std::sqrt(best) - half;
        out[g.index(i, j, k)] = inside ? -magnitude : magnitude;
      }
    }
  }
  return out;
}

ProbabilityVolume simulate_prob(const LabelVolume& label, double tau, double noise_sigma,
                                std::uint64_t seed) {
  if (!(tau > 0.0)) throw InputError("tau must be > 0");
  if (!(noise_sigma >= 0.0)) throw InputError("noise_sigma must be >= 0");
  if (count_foreground(label) == 0) throw InputError("simulate_prob needs a nonempty label");
  const std::vector<double> d = signed_distance(label);
  ProbabilityVolume out(label.geometry());
  for (std::size_t i = 0; i < d.size(); ++i) {
    double p = sigmoid_prob(d[i], tau);
    if (noise_sigma > 0.0) p += noise_sigma * counter_rng::normal(seed, i);
    out.set(i, static_cast<float>(std::clamp(p, 0.0, 1.0)));
  }
  return out;
}

DistractorResult add_distractor(const ScalarVolume& intensity, const LabelVolume& label,
                                const DistractorSpec& spec) {
  require_same_geometry(intensity.geometry(), label.geometry(), "add_distractor");
  if (!(spec.radius >= 0.0)) throw InputError("distractor radius must be >= 0");
  const Geometry& g = label.geometry();
  Vec3 centroid{};
  std::size_t n = 0;
  std::vector<Vec3> main;
  for (std::int64_t k = 0; k < g.dims[2]; ++k) {
    for (std::int64_t j = 0; j < g.dims[1]; ++j) {
      for (std::int64_t i = 0; i < g.dims[0]; ++i) {
        if (label(i, j, k) == 0.0f) continue;
        const Vec3 p = g.voxel_center(i, j, k);
        centroid = centroid + p;
        ++n;
        if (is_boundary(label, i, j, k)) main.push_back(p);
      }
    }
  }
  if (n == 0) throw InputError("add_distractor needs a nonempty main label");
  centroid = centroid * (1.0 / static_cast<double>(n));
  const Vec3 center = centroid + spec.offset;

  DistractorResult out{intensity, LabelVolume(g)};
  if (spec.radius == 0.0) return out;
  for (std::int64_t k = 0; k < g.dims[2]; ++k) {
    for (std::int64_t j = 0; j < g.dims[1]; ++j) {
      for (std::int64_t i = 0; i < g.dims[0]; ++i) {
        const Vec3 p = g.voxel_center(i, j, k);
        if (distance(p, center) > spec.radius) continue;
        if (label(i, j, k) != 0.0f) throw InputError("distractor overlaps the main shape");
        for (const Vec3& q : main) {
          if (distance(p, q) < 2.0) throw InputError("distractor within 2 mm of the main shape");
        }
        const std::size_t idx = g.index(i, j, k);
        double value = spec.intensity_mean;
        if (spec.noise_sigma > 0.0) value += spec.noise_sigma * counter_rng::normal(spec.seed, idx);
        out.intensity.set(idx, static_cast<float>(value));
        out.label.set(idx, 1.0f);
      }
    }
  }
  return out;
}

}  // namespace surfseg
