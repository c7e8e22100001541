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

#include "evaug/pipeline.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "evaug/errors.h"
#include "evaug/event_sim.h"

namespace evaug {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point& mark) {
  const Clock::time_point now = Clock::now();
  const double s = std::chrono::duration<double>(now - mark).count();
  mark = now;
  return s;
}

float sample_zero_fill(std::span<const float> plane, std::size_t w,
                       std::size_t h, double sx, double sy) {
  const double fx0 = std::floor(sx);
  const double fy0 = std::floor(sy);
  const double ax = sx - fx0;
  const double ay = sy - fy0;
  const auto x0 = static_cast<long long>(fx0);
  const auto y0 = static_cast<long long>(fy0);
  const auto tap = [&](long long x, long long y) -> double {
    if (x < 0 || y < 0 || x >= static_cast<long long>(w) ||
        y >= static_cast<long long>(h)) {
      return 0.0;
    }
    return plane[static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x)];
  };
  const double top = (1.0 - ax) * tap(x0, y0) + ax * tap(x0 + 1, y0);
  const double bot = (1.0 - ax) * tap(x0, y0 + 1) + ax * tap(x0 + 1, y0 + 1);
  return static_cast<float>((1.0 - ay) * top + ay * bot);
}

EventHistogram rotate_histogram(const EventHistogram& in, double angle_deg) {
  EventHistogram out(in.timesteps(), in.height(), in.width());
  const std::size_t w = in.width();
  const std::size_t h = in.height();
  const double cx = (static_cast<double>(w) - 1.0) / 2.0;
  const double cy = (static_cast<double>(h) - 1.0) / 2.0;
  const double rad = angle_deg * std::numbers::pi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  for (std::size_t t = 0; t < in.timesteps(); ++t) {
    for (std::size_t p = 0; p < EventHistogram::kChannels; ++p) {
      std::span<const float> src = in.plane(t, p);
      std::span<float> dst = out.plane(t, p);
      for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
          // Inverse map: rotate the destination point back by -angle.
          const double dx = static_cast<double>(x) - cx;
          const double dy = static_cast<double>(y) - cy;
          const double sx = cx + c * dx + s * dy;
          const double sy = cy - s * dx + c * dy;
          dst[y * w + x] = sample_zero_fill(src, w, h, sx, sy);
        }
      }
    }
  }
  return out;
}

}  // namespace

StageTimings& StageTimings::operator+=(const StageTimings& o) {
  geometric += o.geometric;
  scene_gen += o.scene_gen;
  raster += o.raster;
  diff += o.diff;
  noise += o.noise;
  mask += o.mask;
  total += o.total;
  return *this;
}

SceneDraw sample_scene_and_paths(Rng& rng, const AugConfig& cfg, int width,
                                 int height) {
  SceneDraw draw;
  draw.scene = sample_scene(rng, cfg, width, height);
  const std::size_t n = cfg.timesteps + 1;
  draw.paths.reserve(draw.scene.shapes.size());
  for (const ShapeSpec& shape : draw.scene.shapes) {
    if (cfg.mode == Mode::kShapeAugLegacy) {
      draw.paths.push_back(
          sample_linear_path(rng, shape.center, shape.size, width, height, n));
    } else {
      draw.paths.push_back(sample_path(rng, shape.center, shape.size, width,
                                       height, n, cfg.control_point_relative));
    }
  }
  return draw;
}

EventHistogram augment_geometric(const EventHistogram& hist,
                                 const GeoParams& gp, Rng& rng) {
  gp.validate();
  const std::size_t padded_h = hist.height() + 2 * gp.pad;
  const std::size_t padded_w = hist.width() + 2 * gp.pad;
  if (gp.crop_h > padded_h || gp.crop_w > padded_w) {
    throw_config("crop " + std::to_string(gp.crop_h) + "x" +
                 std::to_string(gp.crop_w) + " exceeds padded size " +
                 std::to_string(padded_h) + "x" + std::to_string(padded_w));
  }
  const auto oy = static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(padded_h - gp.crop_h)));
  const auto ox = static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(padded_w - gp.crop_w)));
  const bool flip = rng.bernoulli(gp.p_hflip);
  const double angle = rng.uniform(-gp.max_rotate_deg, gp.max_rotate_deg);

  EventHistogram out(hist.timesteps(), gp.crop_h, gp.crop_w);
  for (std::size_t t = 0; t < hist.timesteps(); ++t) {
    for (std::size_t p = 0; p < EventHistogram::kChannels; ++p) {
      std::span<const float> src = hist.plane(t, p);
      std::span<float> dst = out.plane(t, p);
      for (std::size_t y = 0; y < gp.crop_h; ++y) {
        const std::size_t py = oy + y;
        if (py < gp.pad || py >= gp.pad + hist.height()) continue;
        const std::size_t sy = py - gp.pad;
        for (std::size_t x = 0; x < gp.crop_w; ++x) {
          const std::size_t px = ox + (flip ? gp.crop_w - 1 - x : x);
          if (px < gp.pad || px >= gp.pad + hist.width()) continue;
          dst[y * gp.crop_w + x] = src[sy * hist.width() + (px - gp.pad)];
        }
      }
    }
  }
  if (angle == 0.0) return out;
  return rotate_histogram(out, angle);
}

namespace {

// occlusion_mask followed by merge_histograms, in one pass over the cells.
EventHistogram mask_and_merge(const EventHistogram& real,
                              const EventHistogram& simulated,
                              const FrameSequence& seq, bool mask_union) {
  EventHistogram out(real.timesteps(), real.height(), real.width());
  const std::size_t plane = real.height() * real.width();
  for (std::size_t k = 0; k < real.timesteps(); ++k) {
    const std::uint8_t* end = seq.frames[k + 1].mask.data();
    const std::uint8_t* start = seq.frames[k].mask.data();
    for (std::size_t p = 0; p < EventHistogram::kChannels; ++p) {
      const float* r = real.plane(k, p).data();
      const float* s = simulated.plane(k, p).data();
      float* o = out.plane(k, p).data();
      for (std::size_t i = 0; i < plane; ++i) {
        const bool hidden = end[i] != 0 || (mask_union && start[i] != 0);
        o[i] = (hidden ? 0.0f : r[i]) + s[i];
      }
    }
  }
  return out;
}

}  // namespace

AugmentTrace augment_traced(const EventHistogram& hist, const AugConfig& cfg,
                            std::uint64_t sample_index) {
  cfg.validate();
  if (hist.timesteps() != cfg.timesteps) {
    throw_config("histogram has " + std::to_string(hist.timesteps()) +
                 " timesteps but the configuration expects " +
                 std::to_string(cfg.timesteps));
  }
  const Clock::time_point start = Clock::now();
  Clock::time_point mark = start;
  AugmentTrace trace;
  Rng rng = Rng::for_sample(cfg.seed, sample_index);

  EventHistogram base;
  if (cfg.geometric) {
    base = augment_geometric(hist, cfg.geo, rng);
    trace.timings.geometric = seconds_since(mark);
  }
  const EventHistogram& input = cfg.geometric ? base : hist;
  if (cfg.mode == Mode::kNone) {
    trace.output = input;
    trace.timings.total = seconds_since(mark) + trace.timings.geometric;
    return trace;
  }
  if (input.width() == 0 || input.height() == 0) {
    throw_config("cannot place shapes on an empty frame");
  }

  const auto w = static_cast<int>(input.width());
  const auto h = static_cast<int>(input.height());
  trace.draw = sample_scene_and_paths(rng, cfg, w, h);
  trace.timings.scene_gen = seconds_since(mark);

  trace.frames = render_sequence(trace.draw.scene, trace.draw.paths,
                                 cfg.timesteps, input.width(), input.height());
  trace.timings.raster = seconds_since(mark);

  EventHistogram simulated(cfg.timesteps, input.height(), input.width());
  for (std::size_t k = 0; k < cfg.timesteps; ++k) {
    diff_into(trace.frames.frames[k], trace.frames.frames[k + 1],
              cfg.noise.event_scale, simulated, k);
  }
  trace.timings.diff = seconds_since(mark);

  if (cfg.noise.enabled) {
    simulated = apply_noise(std::move(simulated), rng, cfg.noise);
  }
  trace.timings.noise = seconds_since(mark);

  trace.output = mask_and_merge(input, simulated, trace.frames, cfg.mask_union);
  trace.simulated = std::move(simulated);
  trace.timings.mask = seconds_since(mark);

  trace.timings.total =
      std::chrono::duration<double>(Clock::now() - start).count();
  return trace;
}

EventHistogram augment(const EventHistogram& hist, const AugConfig& cfg,
                       std::uint64_t sample_index) {
  return augment_traced(hist, cfg, sample_index).output;
}

std::vector<EventHistogram> augment_batch(std::span<const EventHistogram> hists,
                                          const AugConfig& cfg,
                                          std::uint64_t base_index,
                                          std::size_t threads) {
  cfg.validate();
  for (std::size_t i = 1; i < hists.size(); ++i) {
    if (!hists[i].same_shape(hists[0])) {
      throw_data("batch sample " + std::to_string(i) +
                 " differs in shape from sample 0");
    }
  }
  std::vector<EventHistogram> out(hists.size());
  std::vector<std::exception_ptr> errors(hists.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < hists.size(); i = next++) {
      try {
        out[i] = augment(hists[i], cfg, base_index + i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads =
      std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, hists.size()));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i]) continue;
    const std::string prefix = "sample " + std::to_string(base_index + i) + ": ";
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      throw Error(e.code(), prefix + e.what());
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kLogic, prefix + e.what());
    }
  }
  return out;
}

std::vector<float> augment_array(std::span<const float> data,
                                 std::size_t timesteps, std::size_t height,
                                 std::size_t width, const AugConfig& cfg,
                                 std::uint64_t sample_index) {
  const std::size_t expected =
      timesteps * EventHistogram::kChannels * height * width;
  if (data.size() != expected) {
    throw_data("expected a contiguous row-major (T, 2, H, W) float32 array "
               "with " + std::to_string(expected) + " values, got " +
               std::to_string(data.size()));
  }
  EventHistogram hist(timesteps, height, width);
  std::copy(data.begin(), data.end(), hist.data().begin());
  const EventHistogram out = augment(hist, cfg, sample_index);
  return {out.data().begin(), out.data().end()};
}

std::uint64_t checksum(std::span<const EventHistogram> hists) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const EventHistogram& hist : hists) {
    const std::span<const float> cells = hist.data();
    std::size_t i = 0;
    for (; i + 2 <= cells.size(); i += 2) {
      std::uint64_t word = 0;
      std::memcpy(&word, cells.data() + i, sizeof word);
      h = (h ^ word) * 0x100000001b3ULL;
    }
    if (i < cells.size()) {
      std::uint32_t bits = 0;
      std::memcpy(&bits, cells.data() + i, sizeof bits);
      h = (h ^ bits) * 0x100000001b3ULL;
    }
    h = (h ^ cells.size()) * 0x100000001b3ULL;
  }
  return h;
}

}  // namespace evaug
