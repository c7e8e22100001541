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

#include "evaug/geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "evaug/errors.h"

namespace evaug {

Polygon convex_hull(std::span<const Vec2> points) {
  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) {
    throw_degenerate("convex hull needs at least 3 distinct points, got " +
                     std::to_string(pts.size()));
  }

  // Andrew's monotone chain; "<= 0" pops collinear points.
  Polygon hull(2 * pts.size());
  std::size_t k = 0;
  for (const Vec2& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw_degenerate("all points are collinear");
  return hull;
}

bool convex_contains(std::span<const Vec2> ccw_hull, Vec2 p) {
  const std::size_t n = ccw_hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(ccw_hull[i], ccw_hull[(i + 1) % n], p) < 0) return false;
  }
  return n > 0;
}

Polygon rotate_polygon(std::span<const Vec2> vertices, Vec2 pivot,
                       double angle_deg) {
  Polygon out(vertices.begin(), vertices.end());
  if (angle_deg == 0.0) return out;
  const double rad = angle_deg * std::numbers::pi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  for (Vec2& v : out) {
    const Vec2 d = v - pivot;
    v = {pivot.x + c * d.x - s * d.y, pivot.y + s * d.x + c * d.y};
  }
  return out;
}

Polygon translate_polygon(std::span<const Vec2> vertices, Vec2 offset) {
  Polygon out(vertices.begin(), vertices.end());
  if (offset == Vec2{}) return out;
  for (Vec2& v : out) v = v + offset;
  return out;
}

}  // namespace evaug
