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

#include <charconv>
#include <functional>
#include <string>

#include "evaug/errors.h"
#include "evaug/io_formats.h"

namespace evaug {
namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

double to_double(const std::string& key, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw_config(key + ": expected a number, got \"" + std::string(v) + "\"");
  }
  return out;
}

std::uint64_t to_u64(const std::string& key, std::string_view v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw_config(key + ": expected a non-negative integer, got \"" +
                 std::string(v) + "\"");
  }
  return out;
}

bool to_bool(const std::string& key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw_config(key + ": expected true or false, got \"" + std::string(v) + "\"");
}

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt_bool(bool v) { return v ? "true" : "false"; }

using Setter = std::function<void(AugConfig&, const std::string&, std::string_view)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    t["mode"] = [](AugConfig& c, const std::string& k, std::string_view v) {
      const auto m = parse_mode(v);
      if (!m) throw_config(k + ": unknown mode \"" + std::string(v) + "\"");
      c.mode = *m;
    };
    t["max_shapes"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.max_shapes = to_u64(k, v); };
    t["s_min"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.s_min = to_double(k, v); };
    t["s_max"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.s_max = to_double(k, v); };
    t["timesteps"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.timesteps = to_u64(k, v); };
    t["seed"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.seed = to_u64(k, v); };
    t["geometric"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.geometric = to_bool(k, v); };
    t["control_point_relative"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.control_point_relative = to_bool(k, v); };
    t["mask_union"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.mask_union = to_bool(k, v); };
    t["noise.enabled"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.noise.enabled = to_bool(k, v); };
    t["noise.count_jitter_lo"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.noise.count_jitter_lo = to_double(k, v); };
    t["noise.count_jitter_hi"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.noise.count_jitter_hi = to_double(k, v); };
    t["noise.p_zero"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.noise.p_zero = to_double(k, v); };
    t["noise.clip_base"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.noise.clip_base = to_double(k, v); };
    t["noise.clip_rand_lo"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.noise.clip_rand_lo = to_double(k, v); };
    t["noise.clip_rand_hi"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.noise.clip_rand_hi = to_double(k, v); };
    t["noise.event_scale"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.noise.event_scale = to_double(k, v); };
    t["geo.pad"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.geo.pad = to_u64(k, v); };
    t["geo.crop_h"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.geo.crop_h = to_u64(k, v); };
    t["geo.crop_w"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.geo.crop_w = to_u64(k, v); };
    t["geo.p_hflip"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.geo.p_hflip = to_double(k, v); };
    t["geo.max_rotate_deg"] = [](AugConfig& c, const std::string& k, std::string_view v) { c.geo.max_rotate_deg = to_double(k, v); };
    return t;
  }();
  return table;
}

void apply(AugConfig& cfg, const std::string& key, std::string_view value) {
  const auto it = setters().find(key);
  if (it == setters().end()) throw_config("unknown config key \"" + key + "\"");
  it->second(cfg, key, trim(value));
}

}  // namespace

AugConfig config_from_map(const std::map<std::string, std::string>& values,
                          AugConfig base) {
  for (const auto& [key, value] : values) apply(base, key, value);
  base.validate();
  return base;
}

AugConfig parse_config_text(std::string_view text, AugConfig base) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw_config("config line " + std::to_string(line_no) +
                   ": expected key=value");
    }
    try {
      apply(base, std::string(trim(line.substr(0, eq))), line.substr(eq + 1));
    } catch (const Error& e) {
      throw_config("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  base.validate();
  return base;
}

std::map<std::string, std::string> config_to_map(const AugConfig& c) {
  return {
      {"mode", std::string(mode_name(c.mode))},
      {"max_shapes", std::to_string(c.max_shapes)},
      {"s_min", fmt_double(c.s_min)},
      {"s_max", fmt_double(c.s_max)},
      {"timesteps", std::to_string(c.timesteps)},
      {"seed", std::to_string(c.seed)},
      {"geometric", fmt_bool(c.geometric)},
      {"control_point_relative", fmt_bool(c.control_point_relative)},
      {"mask_union", fmt_bool(c.mask_union)},
      {"noise.enabled", fmt_bool(c.noise.enabled)},
      {"noise.count_jitter_lo", fmt_double(c.noise.count_jitter_lo)},
      {"noise.count_jitter_hi", fmt_double(c.noise.count_jitter_hi)},
      {"noise.p_zero", fmt_double(c.noise.p_zero)},
      {"noise.clip_base", fmt_double(c.noise.clip_base)},
      {"noise.clip_rand_lo", fmt_double(c.noise.clip_rand_lo)},
      {"noise.clip_rand_hi", fmt_double(c.noise.clip_rand_hi)},
      {"noise.event_scale", fmt_double(c.noise.event_scale)},
      {"geo.pad", std::to_string(c.geo.pad)},
      {"geo.crop_h", std::to_string(c.geo.crop_h)},
      {"geo.crop_w", std::to_string(c.geo.crop_w)},
      {"geo.p_hflip", fmt_double(c.geo.p_hflip)},
      {"geo.max_rotate_deg", fmt_double(c.geo.max_rotate_deg)},
  };
}

std::string format_config_text(const AugConfig& cfg) {
  std::string out;
  for (const auto& [key, value] : config_to_map(cfg)) {
    out += key + "=" + value + "\n";
  }
  return out;
}

AugConfig read_config(const std::filesystem::path& path, AugConfig base) {
  const std::vector<std::uint8_t> bytes = read_file_bytes(path);
  return parse_config_text(
      std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()),
      base);
}

}  // namespace evaug
