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

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evaug/config.h"
#include "evaug/event_core.h"
#include "evaug/render.h"

namespace evaug {

// Binary event file, little-endian, no padding:
//   "EVS1" | version u16 | width u16 | height u16 | count u64 |
//   t_start u64 | t_end u64 | count x (x u16, y u16, t u64, p u8)
inline constexpr std::size_t kEventHeaderBytes = 34;
inline constexpr std::size_t kEventRecordBytes = 13;

// Binary histogram file, little-endian:
//   "EVH1" | version u16 | T u32 | C u32 (= 2) | H u32 | W u32 |
//   T*C*H*W float32 in (t, c, y, x) order
inline constexpr std::size_t kHistogramHeaderBytes = 22;

std::vector<std::uint8_t> encode_events(const EventStream& stream);
// Throws kParse with the byte offset of the first problem.
EventStream decode_events(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_histogram(const EventHistogram& hist);
EventHistogram decode_histogram(std::span<const std::uint8_t> bytes);

// CSV events: an optional "# width=W height=H t_start=A t_end=B" line, the
// header "x,y,t,p", then one event per line. Without the metadata line the
// sensor is the bounding box of the events and the window is
// [first t, last t + 1].
std::string encode_events_csv(const EventStream& stream);
// Throws kParse with the 1-based line number of the first problem.
EventStream decode_events_csv(std::string_view text);

void write_events(const EventStream& stream, const std::filesystem::path& path);
void write_events_csv(const EventStream& stream,
                      const std::filesystem::path& path);
// Binary or CSV, chosen by content.
EventStream read_events(const std::filesystem::path& path);

void write_histogram(const EventHistogram& hist,
                     const std::filesystem::path& path);
EventHistogram read_histogram(const std::filesystem::path& path);

// Raw file helpers; throw kIo.
std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path,
                      std::span<const std::uint8_t> bytes);

// Plain-text key=value config. Keys are the AugConfig field names; nested
// noise and geometric fields use "noise." and "geo." prefixes. '#' starts a
// comment. Unknown keys and malformed values throw kConfig.
AugConfig parse_config_text(std::string_view text, AugConfig base = {});
AugConfig config_from_map(const std::map<std::string, std::string>& values,
                          AugConfig base = {});
std::map<std::string, std::string> config_to_map(const AugConfig& cfg);
std::string format_config_text(const AugConfig& cfg);
AugConfig read_config(const std::filesystem::path& path, AugConfig base = {});

// One PNG per timestep named <prefix>_<index>.png with a 4-digit index.
// Histograms: neutral gray where a pixel has no events, otherwise red for
// positive and blue for negative counts (normalised per image). Frames:
// 8-bit gray. Returns the written paths; throws kIo.
std::vector<std::filesystem::path> export_histogram_png(
    const EventHistogram& hist, const std::filesystem::path& dir,
    std::string_view prefix = "events");
std::vector<std::filesystem::path> export_frames_png(
    std::span<const Frame> frames, const std::filesystem::path& dir,
    std::string_view prefix = "frame");

}  // namespace evaug
