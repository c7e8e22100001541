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
#include <filesystem>
#include <optional>
#include <string>

#include "evaug/config.h"

namespace evaug::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // flag, config, parse or data errors
inline constexpr int kExitIo = 2;

// Augmentation flags common to augment, visualize and bench. Unset optionals
// fall back to the config file, then to AugConfig defaults.
struct AugFlags {
  std::optional<std::string> config_path;
  std::optional<std::string> mode;
  std::optional<double> s_max;
  std::optional<double> s_min;
  std::optional<std::size_t> max_shapes;
  std::optional<std::size_t> timesteps;
  std::optional<std::uint64_t> seed;
  bool geometric = false;
  bool no_noise = false;
};

// Flags override the config file, which overrides built-in defaults.
AugConfig resolve_config(const AugFlags& flags);

struct Size2 {
  std::size_t height = 0;
  std::size_t width = 0;
};

// "HxW", e.g. "80x80"; throws kConfig on anything else.
Size2 parse_size(const std::string& text);

struct AugmentArgs {
  AugFlags aug;
  std::filesystem::path input;
  std::filesystem::path output;
  std::optional<std::string> resize;
  std::size_t threads = 1;
};

struct VisualizeArgs {
  AugFlags aug;
  std::filesystem::path input;
  std::filesystem::path output;
  std::optional<std::string> resize;
  bool augment = false;
  std::uint64_t index = 0;
};

struct BenchArgs {
  AugFlags aug;
  std::string size = "80x80";
  std::size_t iterations = 1000;
  std::size_t threads = 1;
};

struct GenSceneArgs {
  AugFlags aug;
  std::string size = "80x80";
  std::filesystem::path output;
};

int cmd_augment(const AugmentArgs& args);
int cmd_visualize(const VisualizeArgs& args);
int cmd_bench(const BenchArgs& args);
int cmd_gen_scene(const GenSceneArgs& args);

}  // namespace evaug::cli
