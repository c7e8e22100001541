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

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>

#include "evaug/errors.h"
#include "evaug/io_formats.h"

namespace evaug {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f != nullptr) std::fclose(f);
  }
};

// rows: height rows of width * channels bytes. channels is 1 (gray) or 3.
void write_png(const std::filesystem::path& path, std::size_t width,
               std::size_t height, int channels,
               const std::vector<std::uint8_t>& pixels) {
  std::unique_ptr<std::FILE, FileCloser> file(std::fopen(path.c_str(), "wb"));
  if (!file) throw_io("cannot open " + path.string() + " for writing");

  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) throw_io("libpng initialisation failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw_io("libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw_io("failed writing PNG " + path.string());
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(width),
               static_cast<png_uint_32>(height), 8,
               channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  const std::size_t stride = width * static_cast<std::size_t>(channels);
  for (std::size_t y = 0; y < height; ++y) {
    png_write_row(png, pixels.data() + y * stride);
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

std::filesystem::path indexed_name(const std::filesystem::path& dir,
                                   std::string_view prefix, std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "_%04zu.png", i);
  return dir / (std::string(prefix) + buf);
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw_io("cannot create output directory " + dir.string());
  }
}

}  // namespace

std::vector<std::filesystem::path> export_histogram_png(
    const EventHistogram& hist, const std::filesystem::path& dir,
    std::string_view prefix) {
  ensure_dir(dir);
  constexpr std::uint8_t kNeutral = 128;
  const std::size_t w = hist.width();
  const std::size_t h = hist.height();
  std::vector<std::filesystem::path> written;
  std::vector<std::uint8_t> rgb(w * h * 3);
  for (std::size_t t = 0; t < hist.timesteps(); ++t) {
    std::span<const float> neg = hist.plane(t, 0);
    std::span<const float> pos = hist.plane(t, 1);
    float peak = 0.0f;
    for (std::size_t i = 0; i < w * h; ++i) {
      peak = std::max({peak, neg[i], pos[i]});
    }
    for (std::size_t i = 0; i < w * h; ++i) {
      std::uint8_t* px = &rgb[i * 3];
      if (pos[i] <= 0.0f && neg[i] <= 0.0f) {
        px[0] = px[1] = px[2] = kNeutral;
        continue;
      }
      const auto level = [&](float v) {
        if (v <= 0.0f) return std::uint8_t{0};
        return static_cast<std::uint8_t>(std::lround(127.0f + 128.0f * v / peak));
      };
      px[0] = level(pos[i]);
      px[1] = 0;
      px[2] = level(neg[i]);
    }
    written.push_back(indexed_name(dir, prefix, t));
    write_png(written.back(), w, h, 3, rgb);
  }
  return written;
}

std::vector<std::filesystem::path> export_frames_png(
    std::span<const Frame> frames, const std::filesystem::path& dir,
    std::string_view prefix) {
  ensure_dir(dir);
  std::vector<std::filesystem::path> written;
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const Frame& f = frames[k];
    std::vector<std::uint8_t> gray(f.intensity.size());
    for (std::size_t i = 0; i < gray.size(); ++i) {
      const float v = std::clamp(f.intensity[i], 0.0f, 1.0f);
      gray[i] = static_cast<std::uint8_t>(std::lround(v * 255.0f));
    }
    written.push_back(indexed_name(dir, prefix, k));
    write_png(written.back(), f.width, f.height, 1, gray);
  }
  return written;
}

}  // namespace evaug
