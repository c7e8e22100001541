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
#include <vector>

#include "evaug/geometry.h"
#include "evaug/random.h"
#include "evaug/shape_gen.h"

namespace evaug {

// Quadratic Bezier path sampled at n uniformly spaced parameter values, plus
// the per-step rotation of the shape travelling on it.
struct PathSpec {
  Vec2 p0;
  Vec2 p1;  // control point
  Vec2 p2;
  double gamma_deg = 0.0;  // rotation added at every step
  std::vector<Vec2> samples;

  friend bool operator==(const PathSpec&, const PathSpec&) = default;
};

// B(i / (n - 1)) for i in [0, n). The first and last samples are exactly
// p0 and p2. Throws kConfig for n < 2.
std::vector<Vec2> bezier_points(Vec2 p0, Vec2 p1, Vec2 p2, std::size_t n);

// Uniform point on the border of the frame rectangle inflated by margin:
// x in [-m, W + m), y in {-m, H + m}, or x in {-m, W + m}, y in [-m, H + m).
Vec2 sample_exit_point(Rng& rng, double margin, int width, int height);

// Curved path starting at center. The control point is drawn from
// U(-W/2, W/2) x U(-H/2, H/2), as absolute coordinates or as an offset from
// center when control_point_relative is set. The end point lies s outside
// the frame; gamma ~ U(-10, 10) degrees.
PathSpec sample_path(Rng& rng, Vec2 center, double s, int width, int height,
                     std::size_t n, bool control_point_relative = false);

// Straight, constant-speed path with no rotation: control point at the
// midpoint of start and end.
PathSpec sample_linear_path(Rng& rng, Vec2 center, double s, int width,
                            int height, std::size_t n);

// Rotation of a hull about pivot. Vertex order (and so orientation) is kept.
Polygon rotate_shape(std::span<const Vec2> hull, Vec2 pivot, double angle_deg);

// Shape pose at one step: a hull or a circle centre.
struct Placement {
  Polygon hull;  // empty for circles
  Vec2 center;
};

// Moves the shape so its center sits on samples[step], then rotates it about
// that point by step * gamma. Throws kLogic if step is out of range.
Placement place_shape_at_step(const ShapeSpec& shape, const PathSpec& path,
                              std::size_t step);

}  // namespace evaug
