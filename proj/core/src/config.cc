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

#include "evaug/config.h"

#include <cmath>
#include <string>

#include "evaug/errors.h"

namespace evaug {

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::kShapeAugPP:
      return "shapeaugpp";
    case Mode::kShapeAugLegacy:
      return "shapeaug_legacy";
    case Mode::kNone:
      return "none";
  }
  return "none";
}

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "shapeaugpp") return Mode::kShapeAugPP;
  if (name == "shapeaug_legacy" || name == "legacy") {
    return Mode::kShapeAugLegacy;
  }
  if (name == "none") return Mode::kNone;
  return std::nullopt;
}

void NoiseParams::validate() const {
  if (!(p_zero >= 0.0 && p_zero <= 1.0)) {
    throw_config("noise.p_zero must lie in [0, 1]");
  }
  if (!(count_jitter_lo > 0.0 && count_jitter_lo <= count_jitter_hi)) {
    throw_config("noise jitter bounds need 0 < count_jitter_lo <= "
                 "count_jitter_hi");
  }
  if (!(clip_rand_lo > 0.0 && clip_rand_lo <= clip_rand_hi &&
        clip_rand_hi <= 1.0)) {
    throw_config("noise clip bounds need 0 < clip_rand_lo <= clip_rand_hi "
                 "<= 1");
  }
  if (!(clip_base > 0.0)) throw_config("noise.clip_base must be positive");
  if (!(event_scale > 0.0) || !std::isfinite(event_scale)) {
    throw_config("noise.event_scale must be positive");
  }
}

void GeoParams::validate() const {
  if (crop_h < 1 || crop_w < 1) throw_config("geo crop must be at least 1x1");
  if (!(p_hflip >= 0.0 && p_hflip <= 1.0)) {
    throw_config("geo.p_hflip must lie in [0, 1]");
  }
  if (!(max_rotate_deg >= 0.0) || !std::isfinite(max_rotate_deg)) {
    throw_config("geo.max_rotate_deg must be a non-negative number");
  }
}

void AugConfig::validate() const {
  if (!(s_min > 0.0)) throw_config("s_min must be positive");
  if (!(s_min <= s_max) || !std::isfinite(s_max)) {
    throw_config("s_min must not exceed s_max");
  }
  if (max_shapes < 1) throw_config("max_shapes must be >= 1");
  if (timesteps < 1) throw_config("timesteps must be >= 1");
  noise.validate();
  geo.validate();
}

}  // namespace evaug
