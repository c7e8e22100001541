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
#include <optional>
#include <string_view>

namespace evaug {

enum class Mode : std::uint8_t {
  kShapeAugPP,      // convex polygons on quadratic Bezier paths, rotating
  kShapeAugLegacy,  // squares and circles on straight paths
  kNone,            // shape augmentation off
};

std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

// Noise model applied to simulated shape events.
struct NoiseParams {
  bool enabled = true;
  double count_jitter_lo = 0.5;
  double count_jitter_hi = 1.5;
  double p_zero = 0.1;
  double clip_base = 0.9;
  double clip_rand_lo = 0.5;
  double clip_rand_hi = 1.0;
  double event_scale = 5.0;  // events per unit of intensity change

  void validate() const;
};

// Baseline geometric augmentation: zero-pad, random crop, random
// horizontal flip, random rotation.
struct GeoParams {
  std::size_t pad = 7;
  std::size_t crop_h = 80;
  std::size_t crop_w = 80;
  double p_hflip = 0.5;
  double max_rotate_deg = 15.0;

  void validate() const;
};

struct AugConfig {
  Mode mode = Mode::kShapeAugPP;
  std::size_t max_shapes = 4;
  double s_min = 5.0;
  double s_max = 30.0;
  std::size_t timesteps = 10;
  NoiseParams noise;
  GeoParams geo;
  bool geometric = false;  // run the geometric baseline before shapes
  std::uint64_t seed = 0;
  bool control_point_relative = false;
  bool mask_union = false;

  // Throws kConfig naming the first offending field.
  void validate() const;
};

}  // namespace evaug
