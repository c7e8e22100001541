// Copyright 2026 The evaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <span>
#include <sstream>
#include <string_view>
#include <thread>
#include <vector>

#include "evaug/errors.h"
#include "evaug/event_core.h"
#include "evaug/io_formats.h"
#include "evaug/pipeline.h"
#include "evaug/random.h"
#include "evaug/render.h"

namespace evaug::cli {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int report(const std::exception& e) {
  std::cerr << "evaug: " << e.what() << "\n";
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return err->code() == ErrorCode::kIo ? kExitIo : kExitUsage;
  }
  if (dynamic_cast<const fs::filesystem_error*>(&e) != nullptr) return kExitIo;
  return kExitUsage;
}

// Runs fn(i) for i in [0, n) on up to `threads` workers. The exception of
// the lowest failing index wins so diagnostics do not depend on scheduling.
void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t k = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (k == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(k);
    for (std::size_t w = 0; w < k; ++w) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

bool config_sets_timesteps(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    std::erase_if(key, [](unsigned char c) { return std::isspace(c) != 0; });
    if (key == "timesteps") return true;
  }
  return false;
}

bool timesteps_explicit(const AugFlags& flags) {
  return flags.timesteps.has_value() ||
         (flags.config_path && config_sets_timesteps(*flags.config_path));
}

bool is_histogram_file(std::span<const std::uint8_t> bytes) {
  return bytes.size() >= 4 && std::string_view(reinterpret_cast<const char*>(bytes.data()), 4) == "EVH1";
}

// Loads a histogram file as is, or bins an event file into cfg.timesteps bins.
// When the histogram's own T should be kept, cfg.timesteps is updated to it.
EventHistogram load_input(const fs::path& path, AugConfig& cfg,
                          bool adopt_timesteps,
                          const std::optional<Size2>& resize) {
  const std::vector<std::uint8_t> bytes = read_file_bytes(path);
  EventHistogram hist;
  if (is_histogram_file(bytes)) {
    hist = decode_histogram(bytes);
    if (adopt_timesteps) cfg.timesteps = hist.timesteps();
  } else {
    hist = build_histogram(read_events(path), cfg.timesteps);
  }
  if (resize) hist = resize_bilinear(hist, resize->height, resize->width);
  return hist;
}

std::vector<fs::path> collect_inputs(const fs::path& input) {
  if (!fs::exists(input)) throw_io("input '" + input.string() + "' does not exist");
  if (!fs::is_directory(input)) return {input};
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(input)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  if (files.empty()) throw_io("input directory '" + input.string() + "' has no files");
  return files;
}

void make_output_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw_io("cannot create output directory '" + dir.string() + "'");
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(Vec2 v) { return "(" + fmt(v.x) + ", " + fmt(v.y) + ")"; }

}  // namespace

AugConfig resolve_config(const AugFlags& flags) {
  AugConfig cfg;
  if (flags.config_path) cfg = read_config(*flags.config_path, cfg);
  if (flags.mode) {
    const auto mode = parse_mode(*flags.mode);
    if (!mode) throw_config("unknown mode '" + *flags.mode + "'");
    cfg.mode = *mode;
  }
  if (flags.s_max) cfg.s_max = *flags.s_max;
  if (flags.s_min) cfg.s_min = *flags.s_min;
  if (flags.max_shapes) cfg.max_shapes = *flags.max_shapes;
  if (flags.timesteps) cfg.timesteps = *flags.timesteps;
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.geometric) cfg.geometric = true;
  if (flags.no_noise) cfg.noise.enabled = false;
  cfg.validate();
  return cfg;
}

Size2 parse_size(const std::string& text) {
  Size2 size;
  char sep = 0;
  char extra = 0;
  std::istringstream in(text);
  if (!(in >> size.height >> sep >> size.width) || (sep != 'x' && sep != 'X') ||
      (in >> extra) || size.height == 0 || size.width == 0 ||
      text.find('-') != std::string::npos) {
    throw_config("size '" + text + "' is not of the form HxW");
  }
  return size;
}

int cmd_augment(const AugmentArgs& args) {
  try {
    const AugConfig base = resolve_config(args.aug);
    const bool adopt = !timesteps_explicit(args.aug);
    std::optional<Size2> resize;
    if (args.resize) resize = parse_size(*args.resize);
    const std::vector<fs::path> inputs = collect_inputs(args.input);
    make_output_dir(args.output);

    std::vector<double> elapsed(inputs.size());
    std::vector<fs::path> outputs(inputs.size());
    std::vector<std::string> shapes(inputs.size());
    const auto wall_start = Clock::now();
    parallel_for(inputs.size(), args.threads, [&](std::size_t i) {
      const auto start = Clock::now();
      AugConfig cfg = base;
      const EventHistogram hist = load_input(inputs[i], cfg, adopt, resize);
      const EventHistogram out = augment(hist, cfg, i);
      outputs[i] = args.output / inputs[i].filename().replace_extension(".evh");
      write_histogram(out, outputs[i]);
      shapes[i] = std::to_string(out.timesteps()) + "x2x" +
                  std::to_string(out.height()) + "x" + std::to_string(out.width());
      elapsed[i] = seconds_since(start);
    });
    const double wall = seconds_since(wall_start);

    for (std::size_t i = 0; i < inputs.size(); ++i) {
      std::cout << "file=" << inputs[i].filename().string()
                << " output=" << outputs[i].string() << " shape=" << shapes[i]
                << " index=" << i << " ms=" << fmt(elapsed[i] * 1e3) << "\n";
    }
    std::cout << "files=" << inputs.size() << " wall_seconds=" << fmt(wall) << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    return report(e);
  }
}

int cmd_visualize(const VisualizeArgs& args) {
  try {
    AugConfig cfg = resolve_config(args.aug);
    std::optional<Size2> resize;
    if (args.resize) resize = parse_size(*args.resize);
    if (!fs::exists(args.input)) {
      throw_io("input '" + args.input.string() + "' does not exist");
    }
    const EventHistogram hist =
        load_input(args.input, cfg, !timesteps_explicit(args.aug), resize);
    make_output_dir(args.output);

    std::vector<fs::path> written = export_histogram_png(hist, args.output, "input");
    if (args.augment) {
      const AugmentTrace trace = augment_traced(hist, cfg, args.index);
      const auto& frames = trace.frames.frames;
      if (frames.size() > 1) {
        auto more = export_frames_png(std::span<const Frame>(frames).subspan(1),
                                      args.output, "frames");
        written.insert(written.end(), more.begin(), more.end());
        more = export_histogram_png(trace.simulated, args.output, "events");
        written.insert(written.end(), more.begin(), more.end());
      }
    }
    for (const auto& p : written) std::cout << p.string() << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    return report(e);
  }
}

int cmd_bench(const BenchArgs& args) {
  try {
    const AugConfig cfg = resolve_config(args.aug);
    const Size2 size = parse_size(args.size);
    const EventHistogram zero(cfg.timesteps, size.height, size.width);
    const std::size_t n = args.iterations;

    std::vector<std::uint64_t> sums(n);
    std::vector<StageTimings> timings(n);
    const auto wall_start = Clock::now();
    parallel_for(n, args.threads, [&](std::size_t i) {
      AugmentTrace trace = augment_traced(zero, cfg, i);
      sums[i] = checksum(std::span<const EventHistogram>(&trace.output, 1));
      timings[i] = trace.timings;
    });
    const double wall = seconds_since(wall_start);

    StageTimings total;
    std::uint64_t combined = 0;
    for (std::size_t i = 0; i < n; ++i) {
      total += timings[i];
      combined = mix64(combined ^ sums[i]);
    }
    const double rate = wall > 0.0 ? static_cast<double>(n) / wall : 0.0;
    char hex[24];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(combined));

    std::cout << "# evaug bench: " << n << " augmentations of " << size.height
              << "x" << size.width << ", T=" << cfg.timesteps << ", mode "
              << mode_name(cfg.mode) << ", " << args.threads << " thread(s)\n"
              << "# " << fmt(rate) << " samples/sec over " << fmt(wall) << " s\n";
    std::cout << "samples=" << n << "\n"
              << "threads=" << args.threads << "\n"
              << "height=" << size.height << "\n"
              << "width=" << size.width << "\n"
              << "timesteps=" << cfg.timesteps << "\n"
              << "mode=" << mode_name(cfg.mode) << "\n"
              << "wall_seconds=" << fmt(wall) << "\n"
              << "samples_per_sec=" << fmt(rate) << "\n"
              << "total_seconds=" << fmt(total.total) << "\n"
              << "stage_geometric_seconds=" << fmt(total.geometric) << "\n"
              << "stage_scene_gen_seconds=" << fmt(total.scene_gen) << "\n"
              << "stage_raster_seconds=" << fmt(total.raster) << "\n"
              << "stage_diff_seconds=" << fmt(total.diff) << "\n"
              << "stage_noise_seconds=" << fmt(total.noise) << "\n"
              << "stage_mask_seconds=" << fmt(total.mask) << "\n"
              << "stage_sum_seconds=" << fmt(total.stage_sum()) << "\n"
              << "checksum=" << hex << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    return report(e);
  }
}

int cmd_gen_scene(const GenSceneArgs& args) {
  try {
    const AugConfig cfg = resolve_config(args.aug);
    if (cfg.mode == Mode::kNone) throw_config("gen-scene needs a shape mode");
    const Size2 size = parse_size(args.size);
    make_output_dir(args.output);

    Rng rng = Rng::for_sample(cfg.seed, 0);
    const SceneDraw draw = sample_scene_and_paths(
        rng, cfg, static_cast<int>(size.width), static_cast<int>(size.height));
    const FrameSequence seq = render_sequence(draw.scene, draw.paths,
                                              cfg.timesteps, size.width, size.height);

    std::ostringstream dump;
    dump << "size " << size.height << "x" << size.width << "\n"
         << "timesteps " << cfg.timesteps << "\n"
         << "mode " << mode_name(cfg.mode) << "\n"
         << "seed " << cfg.seed << "\n"
         << "background " << fmt(draw.scene.background_color) << "\n"
         << "shapes " << draw.scene.shapes.size() << "\n";
    for (std::size_t i = 0; i < draw.scene.shapes.size(); ++i) {
      const ShapeSpec& s = draw.scene.shapes[i];
      const PathSpec& p = draw.paths[i];
      dump << "shape " << i << " kind="
           << (s.kind == ShapeKind::kCircle ? "circle"
               : s.kind == ShapeKind::kSquare ? "square" : "polygon")
           << " center=" << fmt(s.center) << " size=" << fmt(s.size)
           << " color=" << fmt(s.color) << " vertices=" << s.hull.size() << "\n";
      for (const Vec2& v : s.hull) dump << "  vertex " << fmt(v.x) << " " << fmt(v.y) << "\n";
      dump << "  path p0=" << fmt(p.p0) << " p1=" << fmt(p.p1) << " p2=" << fmt(p.p2)
           << " gamma_deg=" << fmt(p.gamma_deg) << "\n";
      for (std::size_t k = 0; k < p.samples.size(); ++k) {
        dump << "  sample " << k << " " << fmt(p.samples[k].x) << " "
             << fmt(p.samples[k].y) << "\n";
      }
    }
    const std::string text = dump.str();
    const fs::path scene_path = args.output / "scene.txt";
    write_file_bytes(scene_path,
                     std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                               text.size()));
    std::cout << scene_path.string() << "\n";
    for (const auto& p : export_frames_png(seq.frames, args.output, "frame")) {
      std::cout << p.string() << "\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return report(e);
  }
}

}  // namespace evaug::cli
