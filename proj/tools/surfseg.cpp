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

// surfseg command-line entry point.

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "surfseg/metaimage.hpp"
#include "surfseg/metrics.hpp"
#include "surfseg/phantom.hpp"
#include "surfseg/pipeline.hpp"
#include "surfseg/refine.hpp"
#include "surfseg/report.hpp"
#include "surfseg/roi.hpp"

namespace fs = std::filesystem;
using namespace surfseg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

struct Failure {
  int code;
  Json body;
};

Failure classify(const std::exception_ptr& error) {
  try {
    std::rethrow_exception(error);
  } catch (const StageError& e) {
    return {e.input_error() ? kExitInput : kExitInternal,
            Json{{"error", e.what()}, {"stage", e.stage()}}};
  } catch (const InputError& e) {
    return {kExitInput, Json{{"error", e.what()}}};
  } catch (const Json::exception& e) {
    return {kExitInput, Json{{"error", e.what()}}};
  } catch (const std::exception& e) {
    return {kExitInternal, Json{{"error", e.what()}}};
  }
}

std::array<std::int64_t, 3> parse_center(const std::string& text) {
  std::array<std::int64_t, 3> c{};
  std::stringstream ss(text);
  std::string part;
  int n = 0;
  while (std::getline(ss, part, ',')) {
    if (n == 3) throw InputError("--center needs exactly three comma-separated integers");
    std::size_t used = 0;
    try {
      c[static_cast<std::size_t>(n)] = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw InputError("bad --center component '" + part + "'");
    ++n;
  }
  if (n != 3) throw InputError("--center needs exactly three comma-separated integers");
  return c;
}

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path.string() + "': " + e.what());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw InputError("cannot write '" + path.string() + "'");
}

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_text(path, j.dump(2) + "\n");
  }
}

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DEEP_LOGISMOS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      throw InputError("DEEP_LOGISMOS_THREADS must be a positive integer");
    }
    n = static_cast<unsigned>(v);
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

struct SegmentArgs {
  std::string intensity;
  std::string prob;
  std::string center;
  std::string out;
  std::string report;
  std::string batch;
  std::string cost_mode = "eq1";
  std::string column_mode = "elf";
  std::string init_mode = "refined-mask";
  bool no_refine = false;
  PipelineConfig config;
};

struct BatchJob {
  fs::path intensity;
  fs::path prob;
  std::array<std::int64_t, 3> center{};
  fs::path out;
};

int run_segment(SegmentArgs& a) {
  a.config.cost_mode = parse_cost_mode(a.cost_mode);
  a.config.column_mode = parse_column_mode(a.column_mode);
  a.config.init_mode = parse_init_mode(a.init_mode);
  a.config.refine = !a.no_refine;
  a.config.validate();

  if (a.batch.empty()) {
    if (a.intensity.empty() || a.prob.empty() || a.center.empty() || a.out.empty()) {
      throw InputError("segment needs --intensity, --prob, --center and --out (or --batch)");
    }
    const PipelineResult r =
        run_pipeline_files(a.intensity, a.prob, parse_center(a.center), a.config, a.out);
    emit(pipeline_report(a.config, r), a.report);
    return kExitOk;
  }

  const Json list = read_json_file(a.batch);
  if (!list.is_array()) throw InputError("batch file must be a JSON array");
  std::vector<BatchJob> jobs;
  for (const Json& item : list) {
    BatchJob job;
    try {
      job.intensity = item.at("intensity").get<std::string>();
      job.prob = item.at("prob").get<std::string>();
      job.center = item.at("center").get<std::array<std::int64_t, 3>>();
      job.out = item.at("out").get<std::string>();
    } catch (const Json::exception& e) {
      throw InputError(std::string("batch entry: ") + e.what());
    }
    jobs.push_back(std::move(job));
  }

  std::vector<Json> results(jobs.size());
  std::vector<int> codes(jobs.size(), kExitOk);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        const PipelineResult r = run_pipeline_files(jobs[i].intensity, jobs[i].prob, jobs[i].center,
                                                    a.config, jobs[i].out);
        results[i] = pipeline_report(a.config, r);
      } catch (...) {
        Failure f = classify(std::current_exception());
        codes[i] = f.code;
        results[i] = std::move(f.body);
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = worker_count(jobs.size());
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  emit(Json(results), a.report);
  int code = kExitOk;
  for (int c : codes) {
    if (c == kExitInternal) return kExitInternal;
    if (c == kExitInput) code = kExitInput;
  }
  return code;
}

struct RefineArgs {
  std::string intensity;
  std::string prob;
  std::string center;
  std::string out;
  std::string out_prob;
  double threshold = 0.5;
  std::int64_t roi_size = 32;
  RefineOptions options;
};

int run_refine(const RefineArgs& a) {
  if (!(a.threshold > 0.0 && a.threshold < 1.0)) throw InputError("threshold must be in (0, 1)");
  ScalarVolume intensity = read_scalar_volume(a.intensity);
  ProbabilityVolume prob = read_probability_volume(a.prob);
  require_same_geometry(intensity.geometry(), prob.geometry(), "intensity and probability");
  if (!a.center.empty()) {
    const RoiSpec roi{parse_center(a.center), a.roi_size};
    validate_roi(roi, intensity.geometry());
    intensity = crop_roi(intensity, roi);
    prob = crop_roi(prob, roi);
  }
  const RefineResult r =
      refine_pipeline(prob, threshold(prob, a.threshold), intensity, a.options);
  if (!a.out.empty()) write_metaimage(r.mask, a.out);
  if (!a.out_prob.empty()) write_metaimage(r.prob, a.out_prob);
  Json j = r.report;
  j["foreground_voxels"] = count_foreground(r.mask);
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int run_metrics(const std::string& seg, const std::string& ref) {
  const LabelVolume s = read_label_volume(seg);
  const LabelVolume r = read_label_volume(ref);
  const EvalResult e = evaluate(s, r);
  std::cout << Json{{"dsc", e.dsc}, {"rvd", e.rvd}}.dump() << '\n';
  return kExitOk;
}

int run_phantom(const std::string& spec_path, const std::string& out_dir) {
  const Json j = read_json_file(spec_path);
  const PhantomSpec spec = phantom_spec_from_json(j);
  const double tau = j.value("tau", 1.0);
  const double prob_noise = j.value("prob_noise", 0.05);
  const std::uint64_t prob_seed = j.value("prob_seed", spec.seed + 1);

  Phantom ph = make_phantom(spec);
  LabelVolume prob_source = ph.label;
  std::optional<LabelVolume> distractor;
  if (j.contains("distractor")) {
    const Json& d = j["distractor"];
    DistractorSpec ds;
    if (d.contains("offset")) {
      const auto o = d["offset"].get<std::array<double, 3>>();
      ds.offset = {o[0], o[1], o[2]};
    }
    ds.radius = d.value("radius", ds.radius);
    ds.intensity_mean = d.value("intensity_mean", ds.intensity_mean);
    ds.noise_sigma = d.value("noise_sigma", spec.noise_sigma);
    ds.seed = d.value("seed", spec.seed + 2);
    DistractorResult dr = add_distractor(ph.intensity, ph.label, ds);
    ph.intensity = std::move(dr.intensity);
    for (std::size_t i = 0; i < prob_source.size(); ++i) {
      if (dr.label[i] != 0.0f) prob_source.set(i, 1.0f);
    }
    distractor = std::move(dr.label);
  }
  const ProbabilityVolume prob = simulate_prob(prob_source, tau, prob_noise, prob_seed);

  const fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create '" + dir.string() + "': " + ec.message());
  write_metaimage(ph.intensity, dir / "intensity.mha");
  write_metaimage(ph.label, dir / "label.mha");
  write_metaimage(prob, dir / "prob.mha");
  if (distractor) write_metaimage(*distractor, dir / "distractor.mha");

  Json sidecar = spec;
  sidecar["tau"] = tau;
  sidecar["prob_noise"] = prob_noise;
  sidecar["prob_seed"] = prob_seed;
  if (j.contains("distractor")) sidecar["distractor"] = j["distractor"];
  write_text(dir / "spec.json", sidecar.dump(2) + "\n");

  Json summary{{"intensity", (dir / "intensity.mha").string()},
               {"label", (dir / "label.mha").string()},
               {"prob", (dir / "prob.mha").string()},
               {"spec", (dir / "spec.json").string()},
               {"foreground_voxels", count_foreground(ph.label)}};
  if (distractor) summary["distractor"] = (dir / "distractor.mha").string();
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal-surface segmentation from probability maps"};
  app.require_subcommand(1);

  SegmentArgs seg;
  CLI::App* segment = app.add_subcommand("segment", "Run the full segmentation pipeline");
  segment->add_option("--intensity", seg.intensity, "Intensity volume (.mha)");
  segment->add_option("--prob", seg.prob, "Probability volume (.mha)");
  segment->add_option("--center", seg.center, "ROI center voxel, i,j,k");
  segment->add_option("--out", seg.out, "Output mask (.mha)");
  segment->add_option("--report", seg.report, "Write the JSON report here instead of stdout");
  segment->add_option("--batch", seg.batch,
                      "JSON list of {intensity, prob, center, out}; runs on a worker pool");
  segment->add_option("--roi-size", seg.config.roi_size, "ROI edge length (voxels)")
      ->capture_default_str();
  segment->add_option("--column-length", seg.config.column_length, "Nodes per column")
      ->capture_default_str();
  segment->add_option("--node-spacing-mm", seg.config.node_spacing_mm, "Node spacing (mm)")
      ->capture_default_str();
  segment->add_option("--delta", seg.config.delta, "Smoothness bound (nodes)")
      ->capture_default_str();
  segment->add_option("--threshold", seg.config.threshold, "Probability threshold")
      ->capture_default_str();
  segment->add_option("--cost-mode", seg.cost_mode, "eq1 | gradient")->capture_default_str();
  segment->add_option("--column-mode", seg.column_mode, "elf | normal")->capture_default_str();
  segment->add_option("--init-mode", seg.init_mode, "refined-mask | sphere")
      ->capture_default_str();
  segment->add_option("--sphere-radius-mm", seg.config.sphere_radius_mm,
                      "Initial sphere radius for --init-mode sphere")
      ->capture_default_str();
  segment->add_option("--open-iterations", seg.config.open_iterations, "Opening iterations")
      ->capture_default_str();
  segment->add_option("--close-iterations", seg.config.close_iterations, "Closing iterations")
      ->capture_default_str();
  segment->add_flag("--no-refine", seg.no_refine, "Skip the refinement stage");

  RefineArgs ref;
  CLI::App* refine = app.add_subcommand("refine", "Threshold and refine a probability map");
  refine->add_option("--intensity", ref.intensity, "Intensity volume (.mha)")->required();
  refine->add_option("--prob", ref.prob, "Probability volume (.mha)")->required();
  refine->add_option("--center", ref.center, "Crop an ROI around i,j,k first");
  refine->add_option("--roi-size", ref.roi_size, "ROI edge length (voxels)")->capture_default_str();
  refine->add_option("--threshold", ref.threshold, "Probability threshold")->capture_default_str();
  refine->add_option("--open-iterations", ref.options.open_iterations)->capture_default_str();
  refine->add_option("--close-iterations", ref.options.close_iterations)->capture_default_str();
  refine->add_option("--out", ref.out, "Refined mask (.mha)");
  refine->add_option("--out-prob", ref.out_prob, "Suppressed probability map (.mha)");

  std::string seg_path;
  std::string ref_path;
  CLI::App* metrics = app.add_subcommand("metrics", "DSC and RVD of a mask pair");
  metrics->add_option("--seg", seg_path, "Segmentation mask (.mha)")->required();
  metrics->add_option("--ref", ref_path, "Reference mask (.mha)")->required();

  std::string spec_path;
  std::string out_dir;
  CLI::App* phantom = app.add_subcommand("phantom", "Write a synthetic phantom triple");
  phantom->add_option("--spec", spec_path, "Phantom spec (.json)")->required();
  phantom->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*segment) return run_segment(seg);
    if (*refine) return run_refine(ref);
    if (*metrics) return run_metrics(seg_path, ref_path);
    if (*phantom) return run_phantom(spec_path, out_dir);
  } catch (...) {
    const Failure f = classify(std::current_exception());
    std::cerr << f.body.dump() << '\n';
    return f.code;
  }
  return kExitInternal;
}
