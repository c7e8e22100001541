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

// Brute-force reference implementations used only by tests. Each one takes
// a different algorithmic route from the library code it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "evaug/geometry.h"

namespace evaug::oracle {

inline double cross3(Vec2 a, Vec2 b, Vec2 c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// True when c lies strictly inside the segment ab (a, b, c collinear).
inline bool strictly_between(Vec2 a, Vec2 b, Vec2 c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y) && !(c == a) &&
         !(c == b);
}

// O(n^3) hull: the ordered pair (i, j) is a CCW hull edge iff every other
// point is strictly left of i->j or strictly inside segment ij. Returns the
// set of edge endpoints, which are exactly the strictly convex vertices.
inline std::set<std::pair<double, double>> hull_vertex_set(
    const std::vector<Vec2>& input) {
  std::vector<Vec2> pts;
  for (const Vec2& p : input) {
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  std::set<std::pair<double, double>> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      bool edge = true;
      for (std::size_t k = 0; k < pts.size() && edge; ++k) {
        if (k == i || k == j) continue;
        const double o = cross3(pts[i], pts[j], pts[k]);
        if (o > 0) continue;
        if (o == 0 && strictly_between(pts[i], pts[j], pts[k])) continue;
        edge = false;
      }
      if (edge) {
        out.insert({pts[i].x, pts[i].y});
        out.insert({pts[j].x, pts[j].y});
      }
    }
  }
  return out;
}

// Point-in-polygon by winding number; points on an edge count as inside.
inline bool winding_inside(const std::vector<Vec2>& poly, Vec2 p) {
  int winding = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % n];
    const double side = cross3(a, b, p);
    if (side == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
        std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y)) {
      return true;
    }
    if (a.y <= p.y) {
      if (b.y > p.y && side > 0) ++winding;
    } else {
      if (b.y <= p.y && side < 0) --winding;
    }
  }
  return winding != 0;
}

// Pixel-by-pixel coverage of a polygon at pixel centers, row-major.
inline std::vector<std::uint8_t> coverage(const std::vector<Vec2>& poly,
                                          std::size_t w, std::size_t h) {
  std::vector<std::uint8_t> mask(w * h, 0);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const Vec2 c{static_cast<double>(x) + 0.5, static_cast<double>(y) + 0.5};
      mask[y * w + x] = winding_inside(poly, c) ? 1 : 0;
    }
  }
  return mask;
}

// Timestep bin by linear search: the largest tau in [0, T) with
// tau * (t_end - t_start) <= (t - t_start) * T.
inline std::size_t reference_bin(std::uint64_t t, std::uint64_t t_start,
                                 std::uint64_t t_end, std::size_t timesteps) {
  const long double num = static_cast<long double>(t - t_start) * timesteps;
  const long double den = static_cast<long double>(t_end - t_start);
  std::size_t tau = 0;
  while (tau + 1 < timesteps && static_cast<long double>(tau + 1) * den <= num) {
    ++tau;
  }
  return tau;
}

// Containment in triangle abc: p lies within distance tol of the inner side
// of every non-degenerate edge and within the tol-inflated bounding box.
// Distances keep the test meaningful for needle-thin or collinear triangles.
inline bool in_triangle(Vec2 a, Vec2 b, Vec2 c, Vec2 p, double tol) {
  if (p.x < std::min({a.x, b.x, c.x}) - tol || p.x > std::max({a.x, b.x, c.x}) + tol ||
      p.y < std::min({a.y, b.y, c.y}) - tol || p.y > std::max({a.y, b.y, c.y}) + tol) {
    return false;
  }
  const double area = cross3(a, b, c);
  const double sign = area < 0 ? -1.0 : 1.0;
  const std::pair<Vec2, Vec2> edges[] = {{a, b}, {b, c}, {c, a}};
  for (const auto& [u, v] : edges) {
    const double len = std::hypot(v.x - u.x, v.y - u.y);
    if (len == 0.0) continue;
    const double dist = cross3(u, v, p) / len;
    // Collinear inputs leave the orientation undefined; both sides qualify.
    if (sign * dist < -tol && std::abs(area) / len > tol) return false;
  }
  return true;
}

}  // namespace evaug::oracle
