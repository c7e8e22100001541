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

#include <gtest/gtest.h>

#include "evaug/errors.h"
#include "evaug/pipeline.h"

namespace evaug {
namespace {

Frame flat(std::size_t w, std::size_t h, float v) { return Frame(w, h, v); }

NoiseParams pinned_noise() {
  NoiseParams np;
  np.count_jitter_lo = 1.0;
  np.count_jitter_hi = 1.0;
  np.p_zero = 0.0;
  np.clip_rand_lo = 1.0;
  np.clip_rand_hi = 1.0;
  return np;
}

TEST(DiffToEventsTest, StaticPairIsZero) {
  const Frame f = flat(4, 3, 0.3f);
  EXPECT_EQ(diff_to_events(f, f, 5.0).sum(), 0.0);
}

TEST(DiffToEventsTest, RoundsHalfUp) {
  Frame prev = flat(2, 1, 0.0f);
  Frame next = flat(2, 1, 0.0f);
  next.intensity[0] = 0.5f;  // 2.5 events -> 3
  prev.intensity[1] = 0.8f;  // 0.8 -> 0.2 is -3 events
  next.intensity[1] = 0.2f;
  const EventHistogram ev = diff_to_events(prev, next, 5.0);
  EXPECT_EQ(ev.at(0, 1, 0, 0), 3.0f);
  EXPECT_EQ(ev.at(0, 0, 0, 0), 0.0f);
  EXPECT_EQ(ev.at(0, 0, 0, 1), 3.0f);
  EXPECT_EQ(ev.at(0, 1, 0, 1), 0.0f);
}

TEST(DiffToEventsTest, DimensionMismatchIsLogicError) {
  try {
    diff_to_events(flat(2, 2, 0), flat(3, 2, 0), 5.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLogic);
  }
}

TEST(ApplyNoiseTest, ZeroInputStaysZero) {
  Rng rng(1);
  const EventHistogram zero(3, 4, 4);
  EXPECT_EQ(apply_noise(zero, rng, NoiseParams{}), zero);
}

TEST(ApplyNoiseTest, CertainDropoutZeroesEverything) {
  EventHistogram h(2, 3, 3);
  std::fill(h.data().begin(), h.data().end(), 4.0f);
  NoiseParams np;
  np.p_zero = 1.0;
  Rng rng(2);
  EXPECT_EQ(apply_noise(h, rng, np).sum(), 0.0);
}

TEST(ApplyNoiseTest, PinnedClipIsNinetyPercentOfMax) {
  EventHistogram h(1, 2, 3);
  const float values[] = {10, 3, 0, 9, 10, 1, 0, 0, 5, 10, 2, 7};
  std::copy(std::begin(values), std::end(values), h.data().begin());
  Rng rng(3);
  const EventHistogram out = apply_noise(h, rng, pinned_noise());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const float in = h.data()[i];
    EXPECT_EQ(out.data()[i], in == 10.0f ? 9.0f : in) << i;
  }
}

TEST(ApplyNoiseTest, NeverCreatesEventsAndStaysUnderThreshold) {
  Rng fill(4);
  NoiseParams np;
  for (int trial = 0; trial < 50; ++trial) {
    EventHistogram h(2, 8, 8);
    for (float& v : h.data()) {
      v = fill.bernoulli(0.3) ? static_cast<float>(fill.uniform_int(1, 12)) : 0.0f;
    }
    Rng rng(trial);
    const EventHistogram out = apply_noise(h, rng, np);
    float in_max = 0;
    for (float v : h.data()) in_max = std::max(in_max, v);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h.data()[i] == 0.0f) EXPECT_EQ(out.data()[i], 0.0f);
      EXPECT_GE(out.data()[i], 0.0f);
      // Jitter is at most 1.5x, then the clip is at most 0.9 * max.
      EXPECT_LE(out.data()[i], 0.9f * std::round(1.5f * in_max) + 1e-4f);
    }
  }
}

TEST(ApplyNoiseTest, DeterministicForFixedSeed) {
  EventHistogram h(2, 4, 4);
  for (std::size_t i = 0; i < h.size(); ++i) h.data()[i] = float(i % 5);
  Rng a(8);
  Rng b(8);
  EXPECT_EQ(apply_noise(h, a, NoiseParams{}), apply_noise(h, b, NoiseParams{}));
}

FrameSequence masks_sequence(std::size_t T, std::size_t w, std::size_t h) {
  FrameSequence seq;
  seq.timesteps = T;
  for (std::size_t k = 0; k <= T; ++k) seq.frames.push_back(flat(w, h, 0.0f));
  return seq;
}

EventHistogram ones(std::size_t T, std::size_t h, std::size_t w) {
  EventHistogram hist(T, h, w);
  std::fill(hist.data().begin(), hist.data().end(), 1.0f);
  return hist;
}

TEST(OcclusionMaskTest, NoCoverageLeavesHistogram) {
  const EventHistogram hist = ones(3, 5, 6);
  EXPECT_EQ(occlusion_mask(hist, masks_sequence(3, 6, 5)), hist);
}

TEST(OcclusionMaskTest, FullCoverageZeroesAll) {
  FrameSequence seq = masks_sequence(3, 6, 5);
  for (Frame& f : seq.frames) std::fill(f.mask.begin(), f.mask.end(), 1);
  EXPECT_EQ(occlusion_mask(ones(3, 5, 6), seq).sum(), 0.0);
}

TEST(OcclusionMaskTest, UsesFrameEndingTheInterval) {
  const std::size_t T = 4;
  FrameSequence seq = masks_sequence(T, 8, 8);
  const std::size_t k = 2;
  seq.frames[k + 1].mask[4 * 8 + 3] = 1;  // pixel (x=3, y=4)
  const EventHistogram hist = ones(T, 8, 8);
  const EventHistogram out = occlusion_mask(hist, seq);
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t p = 0; p < 2; ++p) {
      for (std::size_t y = 0; y < 8; ++y) {
        for (std::size_t x = 0; x < 8; ++x) {
          const bool masked = t == k && x == 3 && y == 4;
          EXPECT_EQ(out.at(t, p, y, x), masked ? 0.0f : 1.0f);
        }
      }
    }
  }
  // With mask_union the same pixel is also cleared in timestep k + 1.
  const EventHistogram uni = occlusion_mask(hist, seq, true);
  EXPECT_EQ(uni.at(k + 1, 0, 4, 3), 0.0f);
  EXPECT_EQ(uni.at(k, 1, 4, 3), 0.0f);
  EXPECT_EQ(uni.sum(), hist.sum() - 4.0);
}

TEST(OcclusionMaskTest, FrameCountMismatchIsLogicError) {
  EXPECT_THROW(occlusion_mask(ones(3, 2, 2), masks_sequence(2, 2, 2)), Error);
}

FrameSequence moving_square(double shift) {
  // A 4 px tall square spanning x in [0, 4] on a black 8 x 8 frame, moved
  // right by `shift` between the two frames.
  SceneSpec scene;
  ShapeSpec s;
  s.kind = ShapeKind::kPolygon;
  s.color = 1.0;
  s.center = {2, 4};
  s.size = 2;
  s.hull = square_hull(s.center, 2);
  scene.shapes = {s};
  PathSpec path;
  path.samples = {{2, 4}, {2 + shift, 4}};
  return render_sequence(scene, std::vector{path}, 1, 8, 8);
}

TEST(SimulateShapeEventsTest, FullWidthShiftFiresOnEdges) {
  NoiseParams np;
  np.enabled = false;
  Rng rng(1);
  const EventHistogram ev = simulate_shape_events(moving_square(4), rng, np);
  for (std::size_t y = 0; y < 8; ++y) {
    for (std::size_t x = 0; x < 8; ++x) {
      const bool rows = y >= 2 && y <= 5;
      EXPECT_EQ(ev.at(0, 0, y, x), rows && x <= 3 ? 5.0f : 0.0f) << x << "," << y;
      EXPECT_EQ(ev.at(0, 1, y, x), rows && x >= 4 && x <= 7 ? 5.0f : 0.0f);
    }
  }
}

TEST(SimulateShapeEventsTest, OverlapColumnsAreSilent) {
  NoiseParams np;
  np.enabled = false;
  Rng rng(1);
  const EventHistogram ev = simulate_shape_events(moving_square(2), rng, np);
  for (std::size_t y = 2; y <= 5; ++y) {
    EXPECT_EQ(ev.at(0, 0, y, 0), 5.0f);
    EXPECT_EQ(ev.at(0, 0, y, 1), 5.0f);
    for (std::size_t x = 2; x <= 3; ++x) {
      EXPECT_EQ(ev.at(0, 0, y, x), 0.0f);
      EXPECT_EQ(ev.at(0, 1, y, x), 0.0f);
    }
    EXPECT_EQ(ev.at(0, 1, y, 4), 5.0f);
    EXPECT_EQ(ev.at(0, 1, y, 5), 5.0f);
  }
  EXPECT_EQ(ev.sum(), 4.0 * 4.0 * 5.0);
}

TEST(SimulateShapeEventsTest, StaticSequenceIsSilentEvenWithNoise) {
  Rng rng(2);
  EXPECT_EQ(simulate_shape_events(moving_square(0), rng, NoiseParams{}).sum(), 0.0);
}

TEST(SimulateShapeEventsTest, PolarityFollowsIntensityChange) {
  AugConfig cfg;
  Rng rng(10);
  NoiseParams np;
  np.enabled = false;
  for (int trial = 0; trial < 20; ++trial) {
    const SceneDraw draw = sample_scene_and_paths(rng, cfg, 32, 32);
    const FrameSequence seq = render_sequence(draw.scene, draw.paths, 10, 32, 32);
    const EventHistogram ev = simulate_shape_events(seq, rng, np);
    double total = 0.0;
    for (std::size_t k = 0; k < 10; ++k) {
      for (std::size_t i = 0; i < 32 * 32; ++i) {
        const double d = double(seq.frames[k + 1].intensity[i]) -
                         double(seq.frames[k].intensity[i]);
        const float pos = ev.plane(k, 1)[i];
        const float neg = ev.plane(k, 0)[i];
        if (d > 0) EXPECT_EQ(neg, 0.0f);
        if (d < 0) EXPECT_EQ(pos, 0.0f);
        if (d == 0) EXPECT_EQ(pos + neg, 0.0f);
        total += round_half_up(std::abs(d) * np.event_scale);
      }
    }
    EXPECT_EQ(ev.sum(), total);
  }
}

}  // namespace
}  // namespace evaug
