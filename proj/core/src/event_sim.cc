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

#include "evaug/event_sim.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "evaug/errors.h"

namespace evaug {

void diff_into(const Frame& prev, const Frame& next, double scale,
               EventHistogram& out, std::size_t step) {
  if (prev.width != next.width || prev.height != next.height) {
    throw_logic("frame pair has mismatched dimensions");
  }
  if (out.width() != next.width || out.height() != next.height ||
      step >= out.timesteps()) {
    throw_logic("event tensor does not match the frame dimensions");
  }
  std::span<float> pos = out.plane(step, 1);
  std::span<float> neg = out.plane(step, 0);
  const std::size_t n = next.intensity.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double d = static_cast<double>(next.intensity[i]) -
                     static_cast<double>(prev.intensity[i]);
    if (d > 0.0) {
      pos[i] = static_cast<float>(round_half_up(d * scale));
    } else if (d < 0.0) {
      neg[i] = static_cast<float>(round_half_up(-d * scale));
    }
  }
}

EventHistogram diff_to_events(const Frame& prev, const Frame& next,
                              double scale) {
  EventHistogram out(1, next.height, next.width);
  diff_into(prev, next, scale, out, 0);
  return out;
}

EventHistogram apply_noise(EventHistogram counts, Rng& rng,
                           const NoiseParams& np) {
  std::span<float> cells = counts.data();
  float max_value = 0.0f;
  bool any = false;
  for (float& v : cells) {
    if (v == 0.0f) continue;
    any = true;
    const double jitter = rng.uniform(np.count_jitter_lo, np.count_jitter_hi);
    v = static_cast<float>(round_half_up(static_cast<double>(v) * jitter));
    max_value = std::max(max_value, v);
    if (np.p_zero > 0.0 && rng.bernoulli(np.p_zero)) v = 0.0f;
  }
  if (!any) return counts;

  // Second pass: the threshold needs the full-tensor maximum first.
  const double draw = rng.uniform(np.clip_rand_lo, np.clip_rand_hi);
  const auto limit =
      static_cast<float>(np.clip_base * static_cast<double>(max_value) * draw);
  for (float& v : cells) v = std::min(v, limit);
  return counts;
}

EventHistogram occlusion_mask(EventHistogram hist, const FrameSequence& seq,
                              bool mask_union) {
  if (seq.frames.size() != hist.timesteps() + 1) {
    throw_logic("occlusion mask needs " + std::to_string(hist.timesteps() + 1) +
                " frames, got " + std::to_string(seq.frames.size()));
  }
  for (const Frame& f : seq.frames) {
    if (f.width != hist.width() || f.height != hist.height()) {
      throw_logic("frame and histogram dimensions differ");
    }
  }
  for (std::size_t k = 0; k < hist.timesteps(); ++k) {
    const std::vector<std::uint8_t>& end = seq.frames[k + 1].mask;
    const std::vector<std::uint8_t>& start = seq.frames[k].mask;
    std::span<float> neg = hist.plane(k, 0);
    std::span<float> pos = hist.plane(k, 1);
    for (std::size_t i = 0; i < end.size(); ++i) {
      if (end[i] != 0 || (mask_union && start[i] != 0)) {
        neg[i] = 0.0f;
        pos[i] = 0.0f;
      }
    }
  }
  return hist;
}

EventHistogram simulate_shape_events(const FrameSequence& seq, Rng& rng,
                                     const NoiseParams& np) {
  if (seq.frames.size() != seq.timesteps + 1 || seq.frames.empty()) {
    throw_logic("frame sequence must hold timesteps + 1 frames");
  }
  const Frame& first = seq.frames.front();
  EventHistogram events(seq.timesteps, first.height, first.width);
  for (std::size_t k = 0; k < seq.timesteps; ++k) {
    diff_into(seq.frames[k], seq.frames[k + 1], np.event_scale, events, k);
  }
  if (!np.enabled) return events;
  return apply_noise(std::move(events), rng, np);
}

}  // namespace evaug
