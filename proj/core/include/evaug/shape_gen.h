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

#include <cstdint>
#include <functional>
#include <vector>

#include "evaug/config.h"
#include "evaug/geometry.h"
#include "evaug/random.h"

namespace evaug {

enum class ShapeKind : std::uint8_t { kPolygon, kSquare, kCircle };

struct ShapeSpec {
  ShapeKind kind = ShapeKind::kPolygon;
  Polygon hull;  // CCW, absolute pixel coordinates; empty for circles
  double color = 0.0;
  Vec2 center;
  double size = 0.0;  // half-extent; the radius for circles

  friend bool operator==(const ShapeSpec&, const ShapeSpec&) = default;
};

struct SceneSpec {
  std::vector<ShapeSpec> shapes;
  double background_color = 0.0;

  friend bool operator==(const SceneSpec&, const SceneSpec&) = default;
};

// Candidate vertex generator used by sample_polygon. Replaceable so tests can
// force degenerate draws.
using CandidateDraw = std::function<std::vector<Vec2>(Rng&, Vec2, double)>;

inline constexpr int kMinPolygonCandidates = 6;
inline constexpr int kMaxPolygonCandidates = 10;
inline constexpr int kMaxHullAttempts = 16;

// Draws 6..10 points, each at center + (U(-s, s), U(-s, s)).
std::vector<Vec2> draw_polygon_candidates(Rng& rng, Vec2 center, double s);

// Convex hull of a fresh candidate set; the whole set is redrawn when the
// hull degenerates, up to kMaxHullAttempts times, then kDegenerate is thrown.
Polygon sample_polygon(Rng& rng, Vec2 center, double s,
                       const CandidateDraw& draw = draw_polygon_candidates);

// Axis-aligned square of half-side s, CCW from the lower-left corner.
Polygon square_hull(Vec2 center, double s);

// Square or circle (equal odds) for the legacy mode.
ShapeSpec sample_legacy_shape(Rng& rng, const AugConfig& cfg, int width,
                              int height);

// 1..max_shapes shapes in paint order plus a background intensity. Polygons
// in Mode::kShapeAugPP, squares/circles in legacy mode.
SceneSpec sample_scene(Rng& rng, const AugConfig& cfg, int width, int height);

}  // namespace evaug
