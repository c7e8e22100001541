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
#include <string>

namespace evaug {

inline constexpr std::uint16_t kEventFormatVersion = 1;
inline constexpr std::uint16_t kHistogramFormatVersion = 1;

struct VersionInfo {
  std::string library;           // semantic version, e.g. "0.1.0"
  std::string event_format;      // "EVS1 v1"
  std::string histogram_format;  // "EVH1 v1"
};

VersionInfo version_info();

// Single line shared by `evaug --version` and the bindings.
std::string version_string();

}  // namespace evaug
