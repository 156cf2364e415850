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
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfseg/vec3.hpp"

namespace surfseg {

/// Thrown when input data violates a documented precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an internal invariant is found broken.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Dims = std::array<std::int64_t, 3>;

/// Voxel grid placement: voxel (i,j,k) has its center at origin + (i,j,k) * spacing (mm).
struct Geometry {
  Dims dims{1, 1, 1};
  Vec3 spacing{1.0, 1.0, 1.0};
  Vec3 origin{0.0, 0.0, 0.0};

  std::size_t voxel_count() const {
    return static_cast<std::size_t>(dims[0] * dims[1] * dims[2]);
  }
  std::size_t index(std::int64_t i, std::int64_t j, std::int64_t k) const {
    return static_cast<std::size_t>((k * dims[1] + j) * dims[0] + i);
  }
  bool contains(std::int64_t i, std::int64_t j, std::int64_t k) const {
    return i >= 0 && j >= 0 && k >= 0 && i < dims[0] && j < dims[1] && k < dims[2];
  }
  Vec3 voxel_center(std::int64_t i, std::int64_t j, std::int64_t k) const {
    return {origin.x + static_cast<double>(i) * spacing.x,
            origin.y + static_cast<double>(j) * spacing.y,
            origin.z + static_cast<double>(k) * spacing.z};
  }
  /// World position (mm) to continuous voxel index coordinates.
  Vec3 to_index(const Vec3& world) const {
    return {(world.x - origin.x) / spacing.x, (world.y - origin.y) / spacing.y,
            (world.z - origin.z) / spacing.z};
  }

  void validate() const;
  bool operator==(const Geometry&) const = default;
};

enum class VolumeKind { scalar, probability, label };

const char* to_string(VolumeKind kind);

/// Dense 3D grid of 32-bit floats in x-fastest order. The kind tag selects
/// the value invariant checked on construction.
template <VolumeKind Kind>
class Volume {
 public:
  static constexpr VolumeKind kind = Kind;

  Volume() : Volume(Geometry{}) {}
  explicit Volume(const Geometry& geometry, float fill = 0.0f)
      : geometry_(geometry), data_((geometry.validate(), geometry.voxel_count()), fill) {
    check_values();
  }
  Volume(const Geometry& geometry, std::vector<float> data)
      : geometry_(geometry), data_(std::move(data)) {
    geometry_.validate();
    if (data_.size() != geometry_.voxel_count()) {
      throw InputError("volume data length " + std::to_string(data_.size()) +
                       " does not match dims product " +
                       std::to_string(geometry_.voxel_count()));
    }
    check_values();
  }

  const Geometry& geometry() const { return geometry_; }
  const Dims& dims() const { return geometry_.dims; }
  std::size_t size() const { return data_.size(); }

  std::span<const float> values() const { return data_; }

  float operator()(std::int64_t i, std::int64_t j, std::int64_t k) const {
    return data_[geometry_.index(i, j, k)];
  }
  float operator[](std::size_t linear) const { return data_[linear]; }

  /// Unchecked writer; the caller keeps the kind invariant.
  void set(std::size_t linear, float value) { data_[linear] = value; }
  void set(std::int64_t i, std::int64_t j, std::int64_t k, float value) {
    data_[geometry_.index(i, j, k)] = value;
  }

  bool operator==(const Volume&) const = default;

 private:
  void check_values() const;

  Geometry geometry_;
  std::vector<float> data_;
};

using ScalarVolume = Volume<VolumeKind::scalar>;
using ProbabilityVolume = Volume<VolumeKind::probability>;
using LabelVolume = Volume<VolumeKind::label>;

extern template class Volume<VolumeKind::scalar>;
extern template class Volume<VolumeKind::probability>;
extern template class Volume<VolumeKind::label>;

/// Number of voxels with label 1.
std::size_t count_foreground(const LabelVolume& label);

/// Label := value >= threshold.
LabelVolume threshold(const ProbabilityVolume& prob, double threshold);

void require_same_geometry(const Geometry& a, const Geometry& b, const char* what);

}  // namespace surfseg
