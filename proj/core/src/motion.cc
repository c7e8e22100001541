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

#include "evaug/motion.h"

#include <string>

#include "evaug/errors.h"

namespace evaug {

inline constexpr double kMaxStepRotationDeg = 10.0;

std::vector<Vec2> bezier_points(Vec2 p0, Vec2 p1, Vec2 p2, std::size_t n) {
  if (n < 2) throw_config("a Bezier path needs at least 2 samples");
  // de Casteljau evaluation of the quadratic Bernstein form; each lerp is
  // exact when its endpoints coincide, so constant curves stay constant.
  const auto lerp = [](Vec2 a, Vec2 b, double t) { return a + t * (b - a); };
  std::vector<Vec2> out(n);
  const double denom = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / denom;
    out[i] = lerp(lerp(p0, p1, t), lerp(p1, p2, t), t);
  }
  out.front() = p0;
  out.back() = p2;
  return out;
}

Vec2 sample_exit_point(Rng& rng, double margin, int width, int height) {
  const double lo = -margin;
  const double span_x = static_cast<double>(width) + 2.0 * margin;
  const double span_y = static_cast<double>(height) + 2.0 * margin;
  const double x_far = static_cast<double>(width) + margin;
  const double y_far = static_cast<double>(height) + margin;
  double u = rng.uniform(0.0, 2.0 * (span_x + span_y));
  if (u < span_x) return {lo + u, lo};
  u -= span_x;
  if (u < span_x) return {lo + u, y_far};
  u -= span_x;
  if (u < span_y) return {lo, lo + u};
  u -= span_y;
  return {x_far, lo + u};
}

PathSpec sample_path(Rng& rng, Vec2 center, double s, int width, int height,
                     std::size_t n, bool control_point_relative) {
  if (n < 2) throw_config("a Bezier path needs at least 2 samples");
  PathSpec path;
  path.p0 = center;
  const double half_w = static_cast<double>(width) / 2.0;
  const double half_h = static_cast<double>(height) / 2.0;
  const double cx = rng.uniform(-half_w, half_w);
  const double cy = rng.uniform(-half_h, half_h);
  path.p1 = control_point_relative ? Vec2{center.x + cx, center.y + cy}
                                   : Vec2{cx, cy};
  path.p2 = sample_exit_point(rng, s, width, height);
  path.gamma_deg = rng.uniform(-kMaxStepRotationDeg, kMaxStepRotationDeg);
  path.samples = bezier_points(path.p0, path.p1, path.p2, n);
  return path;
}

PathSpec sample_linear_path(Rng& rng, Vec2 center, double s, int width,
                            int height, std::size_t n) {
  if (n < 2) throw_config("a path needs at least 2 samples");
  PathSpec path;
  path.p0 = center;
  path.p2 = sample_exit_point(rng, s, width, height);
  path.p1 = 0.5 * (path.p0 + path.p2);
  path.gamma_deg = 0.0;
  path.samples = bezier_points(path.p0, path.p1, path.p2, n);
  return path;
}

Polygon rotate_shape(std::span<const Vec2> hull, Vec2 pivot,
                     double angle_deg) {
  return rotate_polygon(hull, pivot, angle_deg);
}

Placement place_shape_at_step(const ShapeSpec& shape, const PathSpec& path,
                              std::size_t step) {
  if (step >= path.samples.size()) {
    throw_logic("step " + std::to_string(step) + " outside a path of " +
                std::to_string(path.samples.size()) + " samples");
  }
  const Vec2 at = path.samples[step];
  Placement placed;
  placed.center = at;
  if (shape.kind == ShapeKind::kCircle) return placed;
  placed.hull = rotate_polygon(translate_polygon(shape.hull, at - shape.center),
                               at, static_cast<double>(step) * path.gamma_deg);
  return placed;
}

}  // namespace evaug
