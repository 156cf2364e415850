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

// Runs the surfseg binary as a subprocess.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "surfseg/metaimage.hpp"
#include "surfseg/metrics.hpp"
#include "surfseg/morphology.hpp"
#include "surfseg/phantom.hpp"

using namespace surfseg;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Workspace {
 public:
  explicit Workspace(const std::string& name) : dir_(fs::temp_directory_path() / name) {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }
  const fs::path& dir() const { return dir_; }
  fs::path operator/(const std::string& f) const { return dir_ / f; }

  Run run(const std::string& args) const {
    const fs::path out = dir_ / "stdout.txt";
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd = std::string("\"") + SURFSEG_CLI + "\" " + args + " > \"" +
                            out.string() + "\" 2> \"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
  }

  void write(const std::string& f, const std::string& text) const {
    std::ofstream(dir_ / f) << text;
  }

 private:
  fs::path dir_;
};

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("phantom, refine, segment and metrics") {
  Workspace ws("surfseg_cli_test");
  ws.write("spec.json", R"({"seed": 1, "prob_seed": 2,
                           "distractor": {"offset": [12.5, 0, 0], "radius": 2.5,
                                          "intensity_mean": 40}})");
  Run r = ws.run("phantom --spec " + q(ws / "spec.json") + " --out " + q(ws / "ph"));
  REQUIRE_MESSAGE(r.code == 0, r.err);
  for (const char* f : {"intensity.mha", "label.mha", "prob.mha", "distractor.mha", "spec.json"}) {
    CHECK_MESSAGE(fs::exists(ws.dir() / "ph" / f), f);
  }
  const json sidecar = json::parse(slurp(ws.dir() / "ph" / "spec.json"));
  CHECK(sidecar["prob_seed"] == 2);

  const std::string inputs = " --intensity " + q(ws.dir() / "ph" / "intensity.mha") + " --prob " +
                             q(ws.dir() / "ph" / "prob.mha");

  SUBCASE("refine removes the distractor") {
    r = ws.run("refine" + inputs + " --out " + q(ws / "refined.mha"));
    REQUIRE_MESSAGE(r.code == 0, r.err);
    const json rep = json::parse(r.out);
    CHECK(rep["components_before"].get<int>() >= 2);
    CHECK(rep["components_after"] == 1);
    CHECK(rep.contains("mu1"));
    const LabelVolume mask = read_label_volume(ws / "refined.mha");
    const LabelVolume d = read_label_volume(ws.dir() / "ph" / "distractor.mha");
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (d[i] != 0.0f) REQUIRE(mask[i] == 0.0f);
    }
  }

  SUBCASE("segment writes a mask and a report") {
    r = ws.run("segment" + inputs + " --center 16,16,16 --out " + q(ws / "seg.mha"));
    REQUIRE_MESSAGE(r.code == 0, r.err);
    const json rep = json::parse(r.out);
    CHECK(rep.contains("config"));
    CHECK(fs::exists(ws / "seg.mha"));
    const LabelVolume seg = read_label_volume(ws / "seg.mha");
    CHECK(dsc(seg, read_label_volume(ws.dir() / "ph" / "label.mha")) > 0.8);

    r = ws.run("metrics --seg " + q(ws / "seg.mha") + " --ref " + q(ws / "seg.mha"));
    REQUIRE(r.code == 0);
    const json m = json::parse(r.out);
    CHECK(m["dsc"].get<double>() == 1.0);
    CHECK(m["rvd"].get<double>() == 0.0);
  }

  SUBCASE("batch") {
    const json batch = json::array(
        {{{"intensity", (ws.dir() / "ph" / "intensity.mha").string()},
          {"prob", (ws.dir() / "ph" / "prob.mha").string()},
          {"center", {16, 16, 16}},
          {"out", (ws / "b0.mha").string()}},
         {{"intensity", (ws.dir() / "ph" / "intensity.mha").string()},
          {"prob", (ws / "nope.mha").string()},
          {"center", {16, 16, 16}},
          {"out", (ws / "b1.mha").string()}}});
    ws.write("batch.json", batch.dump());
    r = ws.run("segment --batch " + q(ws / "batch.json"));
    CHECK(r.code == 2);
    const json rep = json::parse(r.out);
    REQUIRE(rep.size() == 2);
    CHECK(rep[0].contains("config"));
    CHECK(rep[1]["stage"] == "load");
    CHECK(fs::exists(ws / "b0.mha"));
  }

  SUBCASE("missing probability file") {
    r = ws.run("segment --intensity " + q(ws.dir() / "ph" / "intensity.mha") + " --prob " +
               q(ws / "missing.mha") + " --center 16,16,16 --out " + q(ws / "x.mha"));
    CHECK(r.code == 2);
    const json e = json::parse(r.err);
    CHECK(e["stage"] == "load");
    CHECK(e.contains("error"));
  }

  SUBCASE("bad arguments") {
    CHECK(ws.run("segment" + inputs + " --center 1,2 --out " + q(ws / "x.mha")).code == 2);
    CHECK(ws.run("segment" + inputs + " --center 16,16,16 --delta -1 --out x").code == 2);
    CHECK(ws.run("metrics --seg " + q(ws / "missing.mha") + " --ref x").code == 2);
    CHECK(ws.run("no-such-command").code == 2);
    ws.write("bad.json", R"({"seed": 1, "colour": "red"})");
    CHECK(ws.run("phantom --spec " + q(ws / "bad.json") + " --out " + q(ws / "p2")).code == 2);
  }
}
