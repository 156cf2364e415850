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

#include "surfseg/metaimage.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

namespace surfseg {
namespace {

static_assert(std::endian::native == std::endian::little,
              "payload encoding assumes a little-endian host");

constexpr std::array<std::string_view, 8> kHeaderKeys = {
    "ObjectType",          "NDims",       "DimSize",        "ElementSpacing", "Offset",
    "ElementByteOrderMSB", "ElementType", "ElementDataFile"};

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw InternalError("number formatting failed");
  return std::string(buf.data(), end);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos >= s.size()) break;
    std::size_t end = s.find(' ', pos);
    if (end == std::string_view::npos) end = s.size();
    words.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

template <typename T>
T parse_number(std::string_view key, std::string_view word) {
  T value{};
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw InputError("MetaImage: malformed number '" + std::string(word) + "' for " +
                     std::string(key));
  }
  return value;
}

template <typename T>
std::array<T, 3> parse_triple(std::string_view key, std::string_view value) {
  const auto words = split_words(value);
  if (words.size() != 3) {
    throw InputError("MetaImage: " + std::string(key) + " needs exactly 3 values");
  }
  return {parse_number<T>(key, words[0]), parse_number<T>(key, words[1]),
          parse_number<T>(key, words[2])};
}

ElementType parse_element_type(std::string_view value) {
  if (value == "MET_UCHAR") return ElementType::uchar;
  if (value == "MET_SHORT") return ElementType::int16;
  if (value == "MET_FLOAT") return ElementType::float32;
  throw InputError("MetaImage: unsupported ElementType '" + std::string(value) + "'");
}

void require_value(std::string_view key, std::string_view value, std::string_view expected) {
  if (value != expected) {
    throw InputError("MetaImage: " + std::string(key) + " must be '" + std::string(expected) +
                     "', got '" + std::string(value) + "'");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "' for reading");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw InputError("write to '" + path.string() + "' failed");
}

}  // namespace

const char* to_string(ElementType type) {
  switch (type) {
    case ElementType::uchar:
      return "MET_UCHAR";
    case ElementType::int16:
      return "MET_SHORT";
    case ElementType::float32:
      return "MET_FLOAT";
  }
  return "MET_UNKNOWN";
}

std::size_t element_size(ElementType type) {
  switch (type) {
    case ElementType::uchar:
      return 1;
    case ElementType::int16:
      return 2;
    case ElementType::float32:
      return 4;
  }
  return 0;
}

MetaImage parse_metaimage(std::string_view bytes) {
  std::map<std::string_view, std::string_view> fields;
  std::size_t pos = 0;
  bool saw_data_file = false;
  while (!saw_data_file) {
    const std::size_t eol = bytes.find('\n', pos);
    if (eol == std::string_view::npos) {
      throw InputError("MetaImage: header ended before ElementDataFile");
    }
    const std::string_view line = bytes.substr(pos, eol - pos);
    pos = eol + 1;
    const std::size_t eq = line.find(" = ");
    if (eq == std::string_view::npos) {
      throw InputError("MetaImage: malformed header line '" + std::string(line) + "'");
    }
    const std::string_view key = line.substr(0, eq);
    const std::string_view value = line.substr(eq + 3);
    if (std::find(kHeaderKeys.begin(), kHeaderKeys.end(), key) == kHeaderKeys.end()) {
      throw InputError("MetaImage: unsupported header key '" + std::string(key) + "'");
    }
    if (!fields.emplace(key, value).second) {
      throw InputError("MetaImage: duplicate header key '" + std::string(key) + "'");
    }
    saw_data_file = key == "ElementDataFile";
  }
  for (std::string_view key : kHeaderKeys) {
    if (!fields.contains(key)) {
      throw InputError("MetaImage: missing header key '" + std::string(key) + "'");
    }
  }

  require_value("ObjectType", fields["ObjectType"], "Image");
  require_value("NDims", fields["NDims"], "3");
  require_value("ElementByteOrderMSB", fields["ElementByteOrderMSB"], "False");
  require_value("ElementDataFile", fields["ElementDataFile"], "LOCAL");

  MetaImage image;
  const auto dims = parse_triple<std::int64_t>("DimSize", fields["DimSize"]);
  const auto spacing = parse_triple<double>("ElementSpacing", fields["ElementSpacing"]);
  const auto offset = parse_triple<double>("Offset", fields["Offset"]);
  image.geometry.dims = {dims[0], dims[1], dims[2]};
  image.geometry.spacing = {spacing[0], spacing[1], spacing[2]};
  image.geometry.origin = {offset[0], offset[1], offset[2]};
  image.geometry.validate();
  image.element_type = parse_element_type(fields["ElementType"]);

  const std::size_t count = image.geometry.voxel_count();
  const std::size_t width = element_size(image.element_type);
  const std::size_t available = bytes.size() - pos;
  if (available < count * width) {
    throw InputError("MetaImage: payload has " + std::to_string(available) + " bytes, expected " +
                     std::to_string(count * width));
  }
  if (available > count * width) {
    throw InputError("MetaImage: " + std::to_string(available - count * width) +
                     " trailing bytes after payload");
  }

  const char* payload = bytes.data() + pos;
  image.data.resize(count);
  for (std::size_t n = 0; n < count; ++n) {
    switch (image.element_type) {
      case ElementType::uchar:
        image.data[n] = static_cast<float>(static_cast<unsigned char>(payload[n]));
        break;
      case ElementType::int16: {
        std::int16_t v;
        std::memcpy(&v, payload + 2 * n, 2);
        image.data[n] = static_cast<float>(v);
        break;
      }
      case ElementType::float32:
        std::memcpy(&image.data[n], payload + 4 * n, 4);
        break;
    }
  }
  return image;
}

std::string encode_metaimage(const Geometry& geometry, ElementType type,
                             std::span<const float> data) {
  geometry.validate();
  if (data.size() != geometry.voxel_count()) {
    throw InputError("MetaImage: data length does not match dims");
  }
  std::ostringstream header;
  header << "ObjectType = Image\n"
         << "NDims = 3\n"
         << "DimSize = " << geometry.dims[0] << ' ' << geometry.dims[1] << ' ' << geometry.dims[2]
         << '\n'
         << "ElementSpacing = " << format_double(geometry.spacing.x) << ' '
         << format_double(geometry.spacing.y) << ' ' << format_double(geometry.spacing.z) << '\n'
         << "Offset = " << format_double(geometry.origin.x) << ' '
         << format_double(geometry.origin.y) << ' ' << format_double(geometry.origin.z) << '\n'
         << "ElementByteOrderMSB = False\n"
         << "ElementType = " << to_string(type) << '\n'
         << "ElementDataFile = LOCAL\n";
  std::string out = header.str();
  const std::size_t head = out.size();
  out.resize(head + data.size() * element_size(type));
  char* payload = out.data() + head;
  for (std::size_t n = 0; n < data.size(); ++n) {
    const float v = data[n];
    switch (type) {
      case ElementType::uchar: {
        if (!(v >= 0.0f && v <= 255.0f) || std::nearbyint(v) != v) {
          throw InputError("MetaImage: value not representable as MET_UCHAR");
        }
        payload[n] = static_cast<char>(static_cast<unsigned char>(v));
        break;
      }
      case ElementType::int16: {
        if (!(v >= -32768.0f && v <= 32767.0f) || std::nearbyint(v) != v) {
          throw InputError("MetaImage: value not representable as MET_SHORT");
        }
        const auto s = static_cast<std::int16_t>(v);
        std::memcpy(payload + 2 * n, &s, 2);
        break;
      }
      case ElementType::float32:
        std::memcpy(payload + 4 * n, &v, 4);
        break;
    }
  }
  return out;
}

MetaImage read_metaimage(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  try {
    return parse_metaimage(bytes);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

ScalarVolume read_scalar_volume(const std::filesystem::path& path) {
  MetaImage image = read_metaimage(path);
  return ScalarVolume(image.geometry, std::move(image.data));
}

ProbabilityVolume read_probability_volume(const std::filesystem::path& path) {
  MetaImage image = read_metaimage(path);
  try {
    return ProbabilityVolume(image.geometry, std::move(image.data));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

LabelVolume read_label_volume(const std::filesystem::path& path) {
  MetaImage image = read_metaimage(path);
  try {
    return LabelVolume(image.geometry, std::move(image.data));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_metaimage(const ScalarVolume& volume, const std::filesystem::path& path) {
  write_file(path, encode_metaimage(volume.geometry(), ElementType::float32, volume.values()));
}

void write_metaimage(const ProbabilityVolume& volume, const std::filesystem::path& path) {
  write_file(path, encode_metaimage(volume.geometry(), ElementType::float32, volume.values()));
}

void write_metaimage(const LabelVolume& volume, const std::filesystem::path& path) {
  write_file(path, encode_metaimage(volume.geometry(), ElementType::uchar, volume.values()));
}

}  // namespace surfseg
