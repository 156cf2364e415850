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

// MetaImage (.mha) reader/writer for a fixed single-file subset:
//
//   ObjectType = Image
//   NDims = 3
//   DimSize = nx ny nz
//   ElementSpacing = sx sy sz
//   Offset = ox oy oz
//   ElementByteOrderMSB = False
//   ElementType = MET_UCHAR | MET_SHORT | MET_FLOAT
//   ElementDataFile = LOCAL
//   <raw little-endian payload, x fastest>
//
// Every line ends with a single LF. Anything outside this subset is rejected.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "surfseg/volume.hpp"

namespace surfseg {

enum class ElementType { uchar, int16, float32 };

const char* to_string(ElementType type);
std::size_t element_size(ElementType type);

struct MetaImage {
  Geometry geometry;
  ElementType element_type = ElementType::float32;
  std::vector<float> data;
};

/// Parses a complete file image (header and payload).
MetaImage parse_metaimage(std::string_view bytes);
/// Serializes geometry and values; values are converted to `type` exactly
/// (non-representable values are an error).
std::string encode_metaimage(const Geometry& geometry, ElementType type,
                             std::span<const float> data);

MetaImage read_metaimage(const std::filesystem::path& path);

ScalarVolume read_scalar_volume(const std::filesystem::path& path);
ProbabilityVolume read_probability_volume(const std::filesystem::path& path);
LabelVolume read_label_volume(const std::filesystem::path& path);

/// Scalar and probability volumes are stored as MET_FLOAT, labels as MET_UCHAR.
void write_metaimage(const ScalarVolume& volume, const std::filesystem::path& path);
void write_metaimage(const ProbabilityVolume& volume, const std::filesystem::path& path);
void write_metaimage(const LabelVolume& volume, const std::filesystem::path& path);

}  // namespace surfseg
