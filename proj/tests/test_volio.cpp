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

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/testgen.hpp"
#include "surfseg/metaimage.hpp"
#include "surfseg/roi.hpp"

using namespace surfseg;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path data_dir() { return SURFSEG_TEST_DATA_DIR; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("surfseg_volio_" + name);
}

std::string header(const std::string& dims, const std::string& type) {
  return "ObjectType = Image\nNDims = 3\nDimSize = " + dims +
         "\nElementSpacing = 1 1 1\nOffset = 0 0 0\nElementByteOrderMSB = False\nElementType = " +
         type + "\nElementDataFile = LOCAL\n";
}

}  // namespace

TEST_CASE("volume kinds check their values") {
  const Geometry g = testgen::cube_geometry(2);
  CHECK_THROWS_AS(ProbabilityVolume(g, std::vector<float>(8, 1.5f)), InputError);
  CHECK_THROWS_AS(ProbabilityVolume(g, std::vector<float>(8, -0.01f)), InputError);
  CHECK_THROWS_AS(LabelVolume(g, std::vector<float>(8, 0.5f)), InputError);
  CHECK_THROWS_AS(ScalarVolume(g, std::vector<float>(8, std::nanf(""))), InputError);
  CHECK_THROWS_AS(ScalarVolume(g, std::vector<float>(7, 0.0f)), InputError);
  CHECK_NOTHROW(ProbabilityVolume(g, std::vector<float>(8, 1.0f)));
  Geometry bad = g;
  bad.spacing.y = 0.0;
  CHECK_THROWS_AS(ScalarVolume{bad}, InputError);
}

TEST_CASE("smallest float volume parses") {
  std::string bytes = header("1 1 1", "MET_FLOAT");
  const float half = 0.5f;
  bytes.append(reinterpret_cast<const char*>(&half), 4);
  const MetaImage m = parse_metaimage(bytes);
  CHECK(m.geometry.dims == Dims{1, 1, 1});
  REQUIRE(m.data.size() == 1);
  CHECK(m.data[0] == 0.5f);
}

TEST_CASE("header errors") {
  SUBCASE("unsupported type") {
    CHECK_THROWS_AS(parse_metaimage(header("1 1 1", "MET_DOUBLE") + std::string(8, '\0')),
                    InputError);
  }
  SUBCASE("short payload") {
    CHECK_THROWS_AS(parse_metaimage(header("2 1 1", "MET_FLOAT") + std::string(4, '\0')),
                    InputError);
  }
  SUBCASE("trailing payload") {
    CHECK_THROWS_AS(parse_metaimage(header("1 1 1", "MET_FLOAT") + std::string(5, '\0')),
                    InputError);
  }
  SUBCASE("duplicate key") {
    std::string h = header("1 1 1", "MET_UCHAR");
    h.insert(0, "ObjectType = Image\n");
    CHECK_THROWS_AS(parse_metaimage(h + std::string(1, '\0')), InputError);
  }
  SUBCASE("missing key") {
    std::string h = header("1 1 1", "MET_UCHAR");
    const auto pos = h.find("Offset");
    h.erase(pos, h.find('\n', pos) - pos + 1);
    CHECK_THROWS_AS(parse_metaimage(h + std::string(1, '\0')), InputError);
  }
  SUBCASE("probability out of range on load") {
    std::string bytes = header("1 1 1", "MET_FLOAT");
    const float v = 1.25f;
    bytes.append(reinterpret_cast<const char*>(&v), 4);
    const auto path = temp_file("badprob.mha");
    std::ofstream(path, std::ios::binary) << bytes;
    CHECK_THROWS_AS(read_probability_volume(path), InputError);
    CHECK_NOTHROW(read_scalar_volume(path));
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_scalar_volume(temp_file("nope.mha")), InputError);
  }
}

TEST_CASE("writer emits the documented bytes") {
  const auto path = temp_file("zeros.mha");
  write_metaimage(LabelVolume(testgen::cube_geometry(2)), path);
  CHECK(slurp(path) == header("2 2 2", "MET_UCHAR") + std::string(8, '\0'));

  Geometry g = testgen::cube_geometry(1);
  g.spacing = {0.5, 0.5, 0.5};
  write_metaimage(ScalarVolume(g), path);
  CHECK(slurp(path).find("\nElementSpacing = 0.5 0.5 0.5\n") != std::string::npos);
}

TEST_CASE("golden files parse to documented values") {
  const MetaImage s = read_metaimage(data_dir() / "golden_short.mha");
  CHECK(s.element_type == ElementType::int16);
  CHECK(s.geometry.dims == Dims{3, 2, 2});
  CHECK(s.geometry.spacing == Vec3{0.5, 0.75, 1.25});
  CHECK(s.geometry.origin == Vec3{-1.5, 2.0, 10.25});
  const std::vector<float> expected = {-50, -49, -48, -40, -39, -38, 50, 51, 52, 60, 61, 62};
  CHECK(s.data == expected);

  const MetaImage f = read_metaimage(data_dir() / "golden_float.mha");
  CHECK(f.element_type == ElementType::float32);
  CHECK(f.data == std::vector<float>{0.5f});

  const LabelVolume u = read_label_volume(data_dir() / "golden_uchar.mha");
  CHECK(std::vector<float>(u.values().begin(), u.values().end()) ==
        std::vector<float>{0, 1, 1, 0, 0, 0, 1, 1});

  // Re-encoding reproduces the checked-in bytes exactly.
  CHECK(encode_metaimage(s.geometry, s.element_type, s.data) ==
        slurp(data_dir() / "golden_short.mha"));
}

TEST_CASE("random round trips are bitwise exact") {
  testgen::Rng rng(11);
  Geometry g = testgen::cube_geometry(16);
  g.spacing = {0.7, 1.1, 2.5};
  g.origin = {-3.25, 0.1, 17.0};
  const auto path = temp_file("rt.mha");

  const ScalarVolume s = testgen::random_scalar(rng, g, -1e4, 1e4);
  write_metaimage(s, path);
  const ScalarVolume s2 = read_scalar_volume(path);
  CHECK(s2.geometry() == g);
  CHECK(std::memcmp(s.values().data(), s2.values().data(), s.size() * 4) == 0);

  const ProbabilityVolume p = testgen::random_prob(rng, g);
  write_metaimage(p, path);
  CHECK(read_probability_volume(path) == p);

  const LabelVolume l = testgen::random_mask(rng, g, 0.4);
  write_metaimage(l, path);
  CHECK(read_label_volume(path) == l);
}

TEST_CASE("ROI crop") {
  testgen::Rng rng(3);
  const ScalarVolume big = testgen::random_scalar(rng, testgen::cube_geometry(64), 0, 100);
  SUBCASE("interior crop is an index shift") {
    const ScalarVolume c = crop_roi(big, {{32, 32, 32}, 32});
    CHECK(c.dims() == Dims{32, 32, 32});
    for (std::int64_t k = 0; k < 32; ++k)
      for (std::int64_t j = 0; j < 32; ++j)
        for (std::int64_t i = 0; i < 32; ++i) REQUIRE(c(i, j, k) == big(i + 16, j + 16, k + 16));
    CHECK(c.geometry().origin == big.geometry().voxel_center(16, 16, 16));
  }
  SUBCASE("identity crop") {
    const ScalarVolume v = testgen::random_scalar(rng, testgen::cube_geometry(32), 0, 1);
    CHECK(crop_roi(v, {{16, 16, 16}, 32}) == v);
  }
  SUBCASE("edge replication") {
    const ScalarVolume v = testgen::random_scalar(rng, testgen::cube_geometry(32), 0, 1);
    const ScalarVolume c = crop_roi(v, {{2, 16, 16}, 32});
    for (std::int64_t k = 0; k < 32; ++k)
      for (std::int64_t j = 0; j < 32; ++j)
        for (std::int64_t i = 0; i < 32; ++i) {
          const std::int64_t si = std::clamp<std::int64_t>(2 - 16 + i, 0, 31);
          REQUIRE(c(i, j, k) == v(si, j, k));
        }
  }
  SUBCASE("invalid ROIs") {
    CHECK_THROWS_AS(crop_roi(big, {{64, 0, 0}, 32}), InputError);
    CHECK_THROWS_AS(crop_roi(big, {{10, 10, 10}, 31}), InputError);
    CHECK_THROWS_AS(crop_roi(big, {{10, 10, 10}, 2}), InputError);
  }
}
