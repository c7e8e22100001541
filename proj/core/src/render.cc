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

#include "evaug/render.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "evaug/errors.h"

namespace evaug {

Frame::Frame(std::size_t w, std::size_t h, float background)
    : width(w), height(h), intensity(w * h, background), mask(w * h, 0) {}

namespace detail {

// Horizontal extent of the polygon on the line y = yc. Edges are matched
// with a small tolerance so rows grazing a vertex still get a candidate
// range; the caller refines it with the exact predicate.
void polygon_row_range(std::span<const Vec2> hull, double yc, double& x_lo,
                       double& x_hi) {
  constexpr double kTol = 1e-6;
  x_lo = std::numeric_limits<double>::infinity();
  x_hi = -std::numeric_limits<double>::infinity();
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = hull[i];
    const Vec2 b = hull[(i + 1) % n];
    const double lo = std::min(a.y, b.y);
    const double hi = std::max(a.y, b.y);
    if (yc < lo - kTol || yc > hi + kTol) continue;
    if (hi - lo <= kTol) {
      x_lo = std::min({x_lo, a.x, b.x});
      x_hi = std::max({x_hi, a.x, b.x});
      continue;
    }
    const double t = std::clamp((yc - a.y) / (b.y - a.y), 0.0, 1.0);
    const double x = a.x + t * (b.x - a.x);
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
  }
}

}  // namespace detail

namespace {

void paint_span(Frame& frame, std::size_t x0, std::size_t x1, std::size_t y,
                float color) {
  const std::size_t row = y * frame.width;
  std::fill(frame.intensity.begin() + row + x0,
            frame.intensity.begin() + row + x1 + 1, color);
  std::fill(frame.mask.begin() + row + x0, frame.mask.begin() + row + x1 + 1,
            std::uint8_t{1});
}

bool circle_contains(Vec2 c, double r, double px, double py) {
  const double dx = px - c.x;
  const double dy = py - c.y;
  return dx * dx + dy * dy <= r * r;
}

void paint_circle(Frame& frame, Vec2 c, double r, float color) {
  if (!(r > 0.0) || frame.width == 0 || frame.height == 0) return;
  const double row_lo = std::floor(c.y - r - 0.5);
  const double row_hi = std::ceil(c.y + r - 0.5);
  const auto last_row = static_cast<double>(frame.height - 1);
  const auto last_col = static_cast<double>(frame.width - 1);
  if (row_hi < 0.0 || row_lo > last_row) return;
  const auto y0 = static_cast<std::size_t>(std::max(0.0, row_lo));
  const auto y1 = static_cast<std::size_t>(std::min(last_row, row_hi));
  for (std::size_t y = y0; y <= y1; ++y) {
    const double yc = static_cast<double>(y) + 0.5;
    const double dy = yc - c.y;
    const double h2 = r * r - dy * dy;
    if (h2 < -1e-6) continue;
    const double half = std::sqrt(std::max(0.0, h2));
    const double c_lo = std::floor(c.x - half - 0.5) - 1.0;
    const double c_hi = std::ceil(c.x + half - 0.5) + 1.0;
    if (c_hi < 0.0 || c_lo > last_col) continue;
    auto x0 = static_cast<std::size_t>(std::max(0.0, c_lo));
    auto x1 = static_cast<std::size_t>(std::min(last_col, c_hi));
    while (x0 <= x1 &&
           !circle_contains(c, r, static_cast<double>(x0) + 0.5, yc)) {
      ++x0;
    }
    if (x0 > x1) continue;
    while (!circle_contains(c, r, static_cast<double>(x1) + 0.5, yc)) --x1;
    paint_span(frame, x0, x1, y, color);
  }
}

}  // namespace

Frame rasterize_scene(const SceneSpec& scene,
                      std::span<const Placement> placements, std::size_t width,
                      std::size_t height) {
  if (placements.size() != scene.shapes.size()) {
    throw_logic("rasterize_scene: " + std::to_string(placements.size()) +
                " placements for " + std::to_string(scene.shapes.size()) +
                " shapes");
  }
  Frame frame(width, height, static_cast<float>(scene.background_color));
  for (std::size_t i = 0; i < placements.size(); ++i) {
    const ShapeSpec& shape = scene.shapes[i];
    const auto color = static_cast<float>(shape.color);
    if (shape.kind == ShapeKind::kCircle) {
      paint_circle(frame, placements[i].center, shape.size, color);
      continue;
    }
    for_each_polygon_span(placements[i].hull, width, height,
                          [&](std::size_t x0, std::size_t x1, std::size_t y) {
                            paint_span(frame, x0, x1, y, color);
                          });
  }
  return frame;
}

FrameSequence render_sequence(const SceneSpec& scene,
                              std::span<const PathSpec> paths,
                              std::size_t timesteps, std::size_t width,
                              std::size_t height) {
  if (paths.size() != scene.shapes.size()) {
    throw_logic("render_sequence: " + std::to_string(paths.size()) +
                " paths for " + std::to_string(scene.shapes.size()) +
                " shapes");
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].samples.size() != timesteps + 1) {
      throw_logic("path " + std::to_string(i) + " has " +
                  std::to_string(paths[i].samples.size()) +
                  " samples, expected " + std::to_string(timesteps + 1));
    }
  }
  FrameSequence seq;
  seq.timesteps = timesteps;
  seq.frames.reserve(timesteps + 1);
  std::vector<Placement> placements(scene.shapes.size());
  for (std::size_t k = 0; k <= timesteps; ++k) {
    for (std::size_t i = 0; i < scene.shapes.size(); ++i) {
      placements[i] = place_shape_at_step(scene.shapes[i], paths[i], k);
    }
    seq.frames.push_back(rasterize_scene(scene, placements, width, height));
  }
  return seq;
}

}  // namespace evaug
