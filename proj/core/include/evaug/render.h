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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "evaug/motion.h"
#include "evaug/shape_gen.h"

namespace evaug {

// One grayscale frame and its foreground coverage, row-major H x W.
struct Frame {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<float> intensity;
  std::vector<std::uint8_t> mask;  // 1 where any shape covers the pixel

  Frame() = default;
  Frame(std::size_t w, std::size_t h, float background);

  float value(std::size_t x, std::size_t y) const {
    return intensity[y * width + x];
  }
  bool covered(std::size_t x, std::size_t y) const {
    return mask[y * width + x] != 0;
  }

  friend bool operator==(const Frame&, const Frame&) = default;
};

// T + 1 frames; the events of timestep k come from frames k and k + 1.
struct FrameSequence {
  std::vector<Frame> frames;
  std::size_t timesteps = 0;

  friend bool operator==(const FrameSequence&, const FrameSequence&) = default;
};

// Calls emit(x0, x1, y) for each covered run [x0, x1] of a convex CCW
// polygon. A pixel is covered iff its center (x + 0.5, y + 0.5) is inside or
// on the polygon (convex_contains), clipped to the frame.
template <typename Emit>
void for_each_polygon_span(std::span<const Vec2> hull, std::size_t width,
                           std::size_t height, Emit&& emit);

// Paints shapes in list order over the background (later shapes on top).
// placements must be parallel to scene.shapes.
Frame rasterize_scene(const SceneSpec& scene,
                      std::span<const Placement> placements, std::size_t width,
                      std::size_t height);

// Frame k places every shape at step k of its path, k = 0..timesteps.
// Throws kLogic if a path does not have timesteps + 1 samples or the path
// count differs from the shape count.
FrameSequence render_sequence(const SceneSpec& scene,
                              std::span<const PathSpec> paths,
                              std::size_t timesteps, std::size_t width,
                              std::size_t height);

namespace detail {
void polygon_row_range(std::span<const Vec2> hull, double yc, double& x_lo,
                       double& x_hi);
}  // namespace detail

template <typename Emit>
void for_each_polygon_span(std::span<const Vec2> hull, std::size_t width,
                           std::size_t height, Emit&& emit) {
  if (hull.size() < 3 || width == 0 || height == 0) return;
  double min_y = hull[0].y;
  double max_y = hull[0].y;
  for (const Vec2& v : hull) {
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  // Rows whose center lies in [min_y, max_y], with one row of slack that the
  // exact containment test below resolves.
  const double row_lo = std::floor(min_y - 0.5);
  const double row_hi = std::ceil(max_y - 0.5);
  if (row_hi < 0.0 || row_lo > static_cast<double>(height - 1)) return;
  const auto y0 = static_cast<std::size_t>(std::max(0.0, row_lo));
  const auto y1 = static_cast<std::size_t>(
      std::min(static_cast<double>(height - 1), row_hi));
  const auto last_col = static_cast<double>(width - 1);

  for (std::size_t y = y0; y <= y1; ++y) {
    const double yc = static_cast<double>(y) + 0.5;
    double xl = 0.0;
    double xr = -1.0;
    detail::polygon_row_range(hull, yc, xl, xr);
    if (xr < xl) continue;
    const double c_lo = std::floor(xl - 0.5) - 1.0;
    const double c_hi = std::ceil(xr - 0.5) + 1.0;
    if (c_hi < 0.0 || c_lo > last_col) continue;
    auto x0 = static_cast<std::size_t>(std::max(0.0, c_lo));
    auto x1 = static_cast<std::size_t>(std::min(last_col, c_hi));
    while (x0 <= x1 &&
           !convex_contains(hull, {static_cast<double>(x0) + 0.5, yc})) {
      ++x0;
    }
    if (x0 > x1) continue;
    while (!convex_contains(hull, {static_cast<double>(x1) + 0.5, yc})) --x1;
    emit(x0, x1, y);
  }
}

}  // namespace evaug
