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

#include "evaug/shape_gen.h"

#include <string>

#include "evaug/errors.h"

namespace evaug {
namespace {

Vec2 sample_center(Rng& rng, int width, int height) {
  const double cx = rng.uniform(0.0, static_cast<double>(width - 1));
  const double cy = rng.uniform(0.0, static_cast<double>(height - 1));
  return {cx, cy};
}

}  // namespace

std::vector<Vec2> draw_polygon_candidates(Rng& rng, Vec2 center, double s) {
  const auto n = static_cast<std::size_t>(
      rng.uniform_int(kMinPolygonCandidates, kMaxPolygonCandidates));
  std::vector<Vec2> pts(n);
  for (Vec2& p : pts) {
    const double dx = rng.uniform(-s, s);
    const double dy = rng.uniform(-s, s);
    p = {center.x + dx, center.y + dy};
  }
  return pts;
}

Polygon sample_polygon(Rng& rng, Vec2 center, double s,
                       const CandidateDraw& draw) {
  if (!(s > 0.0)) throw_config("polygon size must be positive");
  for (int attempt = 0; attempt < kMaxHullAttempts; ++attempt) {
    const std::vector<Vec2> candidates = draw(rng, center, s);
    try {
      return convex_hull(candidates);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerate) throw;
    }
  }
  throw_degenerate("no valid polygon after " +
                   std::to_string(kMaxHullAttempts) + " attempts");
}

Polygon square_hull(Vec2 c, double s) {
  return {{c.x - s, c.y - s}, {c.x + s, c.y - s}, {c.x + s, c.y + s},
          {c.x - s, c.y + s}};
}

ShapeSpec sample_legacy_shape(Rng& rng, const AugConfig& cfg, int width,
                              int height) {
  ShapeSpec shape;
  shape.center = sample_center(rng, width, height);
  shape.size = rng.uniform(cfg.s_min, cfg.s_max);
  shape.color = rng.unit();
  if (rng.bernoulli(0.5)) {
    shape.kind = ShapeKind::kSquare;
    shape.hull = square_hull(shape.center, shape.size);
  } else {
    shape.kind = ShapeKind::kCircle;
  }
  return shape;
}

SceneSpec sample_scene(Rng& rng, const AugConfig& cfg, int width, int height) {
  cfg.validate();
  if (width < 1 || height < 1) throw_config("frame must be at least 1x1");
  SceneSpec scene;
  const auto n = static_cast<std::size_t>(
      rng.uniform_int(1, static_cast<std::int64_t>(cfg.max_shapes)));
  scene.background_color = rng.unit();
  scene.shapes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (cfg.mode == Mode::kShapeAugLegacy) {
      scene.shapes.push_back(sample_legacy_shape(rng, cfg, width, height));
      continue;
    }
    ShapeSpec shape;
    shape.kind = ShapeKind::kPolygon;
    shape.center = sample_center(rng, width, height);
    shape.size = rng.uniform(cfg.s_min, cfg.s_max);
    shape.color = rng.unit();
    shape.hull = sample_polygon(rng, shape.center, shape.size);
    scene.shapes.push_back(std::move(shape));
  }
  return scene;
}

}  // namespace evaug
