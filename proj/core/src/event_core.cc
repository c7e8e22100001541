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

#include "evaug/event_core.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "evaug/errors.h"

namespace evaug {

EventHistogram::EventHistogram(std::size_t timesteps, std::size_t height,
                               std::size_t width)
    : timesteps_(timesteps),
      height_(height),
      width_(width),
      data_(timesteps * kChannels * height * width, 0.0f) {}

std::span<float> EventHistogram::plane(std::size_t t, std::size_t p) {
  return std::span<float>(data_).subspan(index(t, p, 0, 0), plane_size());
}

std::span<const float> EventHistogram::plane(std::size_t t,
                                             std::size_t p) const {
  return std::span<const float>(data_).subspan(index(t, p, 0, 0),
                                               plane_size());
}

double EventHistogram::sum() const {
  return std::accumulate(data_.begin(), data_.end(), 0.0);
}

std::size_t timestep_bin(std::uint64_t t, std::uint64_t t_start,
                         std::uint64_t t_end, std::size_t timesteps) {
  __extension__ using u128 = unsigned __int128;
  const u128 num = static_cast<u128>(t - t_start) * timesteps;
  const auto bin = static_cast<std::size_t>(num / (t_end - t_start));
  return std::min(bin, timesteps - 1);
}

EventHistogram build_histogram(const EventStream& stream,
                               std::size_t timesteps) {
  if (timesteps == 0) throw_config("timestep count must be >= 1");
  if (stream.t_start >= stream.t_end) {
    throw_config("event window requires t_start < t_end (got " +
                 std::to_string(stream.t_start) + " >= " +
                 std::to_string(stream.t_end) + ")");
  }
  EventHistogram hist(timesteps, stream.height, stream.width);
  for (std::size_t i = 0; i < stream.events.size(); ++i) {
    const Event& e = stream.events[i];
    if (e.x >= stream.width || e.y >= stream.height) {
      throw_data("event " + std::to_string(i) + " at (" +
                 std::to_string(e.x) + ", " + std::to_string(e.y) +
                 ") is outside the " + std::to_string(stream.width) + "x" +
                 std::to_string(stream.height) + " sensor");
    }
    if (e.t < stream.t_start || e.t > stream.t_end) {
      throw_data("event " + std::to_string(i) + " timestamp " +
                 std::to_string(e.t) + " is outside the window");
    }
    if (e.p > 1) {
      throw_data("event " + std::to_string(i) + " has polarity " +
                 std::to_string(e.p));
    }
    const std::size_t bin =
        timestep_bin(e.t, stream.t_start, stream.t_end, timesteps);
    hist.at(bin, e.p, e.y, e.x) += 1.0f;
  }
  return hist;
}

namespace {

struct Tap {
  std::size_t lo;
  std::size_t hi;
  float w_hi;
};

// Source taps for each output coordinate, half-pixel-center mapping.
std::vector<Tap> bilinear_taps(std::size_t in, std::size_t out) {
  std::vector<Tap> taps(out);
  const double scale = static_cast<double>(in) / static_cast<double>(out);
  for (std::size_t i = 0; i < out; ++i) {
    double src = (static_cast<double>(i) + 0.5) * scale - 0.5;
    src = std::clamp(src, 0.0, static_cast<double>(in - 1));
    const auto lo = static_cast<std::size_t>(src);
    const std::size_t hi = std::min(lo + 1, in - 1);
    taps[i] = {lo, hi, static_cast<float>(src - static_cast<double>(lo))};
  }
  return taps;
}

}  // namespace

EventHistogram resize_bilinear(const EventHistogram& hist,
                               std::size_t new_height, std::size_t new_width) {
  if (new_height == 0 || new_width == 0) {
    throw_config("resize target must be at least 1x1");
  }
  if (new_height == hist.height() && new_width == hist.width()) return hist;
  EventHistogram out(hist.timesteps(), new_height, new_width);
  if (hist.height() == 0 || hist.width() == 0) return out;

  const std::vector<Tap> ty = bilinear_taps(hist.height(), new_height);
  const std::vector<Tap> tx = bilinear_taps(hist.width(), new_width);
  const std::size_t w = hist.width();
  for (std::size_t t = 0; t < hist.timesteps(); ++t) {
    for (std::size_t p = 0; p < EventHistogram::kChannels; ++p) {
      std::span<const float> src = hist.plane(t, p);
      std::span<float> dst = out.plane(t, p);
      for (std::size_t y = 0; y < new_height; ++y) {
        const Tap& a = ty[y];
        const float* r0 = &src[a.lo * w];
        const float* r1 = &src[a.hi * w];
        for (std::size_t x = 0; x < new_width; ++x) {
          const Tap& b = tx[x];
          const float top = r0[b.lo] + (r0[b.hi] - r0[b.lo]) * b.w_hi;
          const float bot = r1[b.lo] + (r1[b.hi] - r1[b.lo]) * b.w_hi;
          dst[y * new_width + x] = top + (bot - top) * a.w_hi;
        }
      }
    }
  }
  return out;
}

EventHistogram merge_histograms(const EventHistogram& a,
                                const EventHistogram& b) {
  if (!a.same_shape(b)) {
    throw_data("cannot merge histograms of different shapes");
  }
  EventHistogram out = a;
  std::span<float> dst = out.data();
  std::span<const float> src = b.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  return out;
}

}  // namespace evaug
