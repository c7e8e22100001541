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
#include <cstdint>
#include <span>
#include <vector>

namespace evaug {

struct Event {
  std::uint16_t x = 0;
  std::uint16_t y = 0;
  std::uint64_t t = 0;  // microseconds
  std::uint8_t p = 0;   // 0 = negative, 1 = positive

  friend bool operator==(const Event&, const Event&) = default;
};

// Events of one recording window [t_start, t_end] on a width x height sensor.
struct EventStream {
  std::vector<Event> events;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint64_t t_start = 0;
  std::uint64_t t_end = 1;

  friend bool operator==(const EventStream&, const EventStream&) = default;
};

// Dense (T, 2, H, W) tensor of event counts stored row-major as
// (t, polarity, y, x). Cells are float so resizing and noise scaling can
// produce fractional values.
class EventHistogram {
 public:
  static constexpr std::size_t kChannels = 2;

  EventHistogram() = default;
  EventHistogram(std::size_t timesteps, std::size_t height, std::size_t width);

  std::size_t timesteps() const { return timesteps_; }
  std::size_t height() const { return height_; }
  std::size_t width() const { return width_; }
  std::size_t plane_size() const { return height_ * width_; }
  std::size_t size() const { return data_.size(); }

  std::size_t index(std::size_t t, std::size_t p, std::size_t y,
                    std::size_t x) const {
    return ((t * kChannels + p) * height_ + y) * width_ + x;
  }
  float& at(std::size_t t, std::size_t p, std::size_t y, std::size_t x) {
    return data_[index(t, p, y, x)];
  }
  float at(std::size_t t, std::size_t p, std::size_t y, std::size_t x) const {
    return data_[index(t, p, y, x)];
  }

  // One H x W slice for timestep t and polarity p.
  std::span<float> plane(std::size_t t, std::size_t p);
  std::span<const float> plane(std::size_t t, std::size_t p) const;

  std::span<float> data() { return data_; }
  std::span<const float> data() const { return data_; }

  bool same_shape(const EventHistogram& other) const {
    return timesteps_ == other.timesteps_ && height_ == other.height_ &&
           width_ == other.width_;
  }

  double sum() const;

  friend bool operator==(const EventHistogram&,
                         const EventHistogram&) = default;

 private:
  std::size_t timesteps_ = 0;
  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::vector<float> data_;
};

// Timestep bin of an event at time t: floor((t - t_start) / (t_end - t_start)
// * timesteps), with t == t_end clamped into the last bin. Exact integer
// arithmetic. Requires t_start <= t <= t_end and t_start < t_end.
std::size_t timestep_bin(std::uint64_t t, std::uint64_t t_start,
                         std::uint64_t t_end, std::size_t timesteps);

// Counts every event into its (bin, polarity, y, x) cell.
// Throws kConfig for an empty window or timesteps == 0, kData for an event
// outside the sensor, outside the window, or with polarity > 1.
EventHistogram build_histogram(const EventStream& stream,
                               std::size_t timesteps);

// Bilinear resize of each (t, p) slice, half-pixel-center convention
// (align_corners = false) with edge clamping.
EventHistogram resize_bilinear(const EventHistogram& hist,
                               std::size_t new_height, std::size_t new_width);

// Element-wise sum; throws kData on shape mismatch.
EventHistogram merge_histograms(const EventHistogram& a,
                                const EventHistogram& b);

}  // namespace evaug
