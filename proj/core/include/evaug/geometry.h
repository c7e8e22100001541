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

#include <span>
#include <vector>

namespace evaug {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
  friend bool operator==(Vec2 a, Vec2 b) = default;
};

using Polygon = std::vector<Vec2>;

// z-component of (b - a) x (c - a); positive when a, b, c turn left.
inline double orient(Vec2 a, Vec2 b, Vec2 c) {
  return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
}

// Strictly convex hull, counter-clockwise, starting from the lowest-x
// (then lowest-y) vertex. Exact duplicates are removed and collinear
// boundary points are dropped. Throws ErrorCode::kDegenerate when fewer
// than three distinct points remain or all points are collinear.
Polygon convex_hull(std::span<const Vec2> points);

// Inside-or-on test for a counter-clockwise convex polygon.
bool convex_contains(std::span<const Vec2> ccw_hull, Vec2 p);

// Rotates every vertex about pivot. Angle 0 returns the input unchanged.
Polygon rotate_polygon(std::span<const Vec2> vertices, Vec2 pivot,
                       double angle_deg);

Polygon translate_polygon(std::span<const Vec2> vertices, Vec2 offset);

}  // namespace evaug
