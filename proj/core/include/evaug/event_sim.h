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

#include <cmath>
#include <cstddef>

#include "evaug/config.h"
#include "evaug/event_core.h"
#include "evaug/random.h"
#include "evaug/render.h"

namespace evaug {

// floor(x + 0.5); the rounding rule used for every simulated count.
inline double round_half_up(double x) { return std::floor(x + 0.5); }

// Writes the events of one frame pair into timestep `step` of out:
// round(d * scale) positive events where d = next - prev > 0 and
// round(-d * scale) negative events where d < 0. Throws kLogic when the
// frames and histogram disagree on dimensions.
void diff_into(const Frame& prev, const Frame& next, double scale,
               EventHistogram& out, std::size_t step);

// Single-pair convenience: a one-timestep (1, 2, H, W) histogram.
EventHistogram diff_to_events(const Frame& prev, const Frame& next,
                              double scale);

// Jitters every nonzero cell by U(count_jitter_lo, count_jitter_hi) and
// rounds, zeroes nonzero cells with probability p_zero, then clips all cells
// to clip_base * max * U(clip_rand_lo, clip_rand_hi) where max is the largest
// jittered value. An all-zero input is returned untouched. Ignores
// np.enabled; callers decide whether to call it.
EventHistogram apply_noise(EventHistogram counts, Rng& rng,
                           const NoiseParams& np);

// Zeroes both polarities of timestep k wherever frame k + 1 is covered
// (or frame k or k + 1 when mask_union is set).
EventHistogram occlusion_mask(EventHistogram hist, const FrameSequence& seq,
                              bool mask_union = false);

// Differences of consecutive frames stacked into (T, 2, H, W), followed by
// apply_noise when np.enabled.
EventHistogram simulate_shape_events(const FrameSequence& seq, Rng& rng,
                                     const NoiseParams& np);

}  // namespace evaug
