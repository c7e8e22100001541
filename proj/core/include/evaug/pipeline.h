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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "evaug/config.h"
#include "evaug/event_core.h"
#include "evaug/motion.h"
#include "evaug/random.h"
#include "evaug/render.h"
#include "evaug/shape_gen.h"

namespace evaug {

// Seconds spent in each stage of one augmentation.
struct StageTimings {
  double geometric = 0.0;
  double scene_gen = 0.0;  // shapes and paths
  double raster = 0.0;
  double diff = 0.0;
  double noise = 0.0;
  double mask = 0.0;  // occlusion mask and merge
  double total = 0.0;

  double stage_sum() const {
    return geometric + scene_gen + raster + diff + noise + mask;
  }
  StageTimings& operator+=(const StageTimings& o);
};

// A sampled scene with one path per shape.
struct SceneDraw {
  SceneSpec scene;
  std::vector<PathSpec> paths;
};

// Scene and T + 1 sample paths for the configured mode. Legacy mode uses
// straight constant-speed paths without rotation.
SceneDraw sample_scene_and_paths(Rng& rng, const AugConfig& cfg, int width,
                                 int height);

// Everything one augmentation produced, for visualization and benchmarks.
struct AugmentTrace {
  EventHistogram output;
  EventHistogram simulated;  // shape events after noise
  FrameSequence frames;
  SceneDraw draw;
  StageTimings timings;
};

// Shape augmentation of one sample. The random stream is derived from
// (cfg.seed, sample_index) alone, so results do not depend on call order.
// Throws kConfig if cfg is invalid or hist.timesteps() != cfg.timesteps.
EventHistogram augment(const EventHistogram& hist, const AugConfig& cfg,
                       std::uint64_t sample_index);

// augment() plus its intermediate products. For mode == kNone the trace
// holds no frames and an empty simulated tensor.
AugmentTrace augment_traced(const EventHistogram& hist, const AugConfig& cfg,
                            std::uint64_t sample_index);

// Zero-pad, random crop, random horizontal flip, random rotation about the
// crop center with bilinear sampling and zero fill. Throws kConfig if the
// crop exceeds the padded size.
EventHistogram augment_geometric(const EventHistogram& hist,
                                 const GeoParams& gp, Rng& rng);

// Element i equals augment(hists[i], cfg, base_index + i) for any thread
// count. A failing sample is rethrown with its index in the message.
std::vector<EventHistogram> augment_batch(std::span<const EventHistogram> hists,
                                          const AugConfig& cfg,
                                          std::uint64_t base_index,
                                          std::size_t threads = 1);

// Flat-buffer entry point for language bindings: data is a row-major
// (timesteps, 2, height, width) float32 tensor.
std::vector<float> augment_array(std::span<const float> data,
                                 std::size_t timesteps, std::size_t height,
                                 std::size_t width, const AugConfig& cfg,
                                 std::uint64_t sample_index);

// FNV-1a style hash over the float bit patterns of each histogram, taken
// two cells at a time, followed by the cell count.
std::uint64_t checksum(std::span<const EventHistogram> hists);

}  // namespace evaug
