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

#include "evaug/io_formats.h"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "evaug/errors.h"
#include "evaug/version.h"

namespace evaug {
namespace {

constexpr char kEventMagic[4] = {'E', 'V', 'S', '1'};
constexpr char kHistogramMagic[4] = {'E', 'V', 'H', '1'};

class ByteWriter {
 public:
  explicit ByteWriter(std::size_t reserve) { bytes_.reserve(reserve); }

  void raw(const char (&magic)[4]) { bytes_.insert(bytes_.end(), magic, magic + 4); }
  void u8(std::uint8_t v) { bytes_.push_back(v); }
  void u16(std::uint16_t v) { le(v, 2); }
  void u32(std::uint32_t v) { le(v, 4); }
  void u64(std::uint64_t v) { le(v, 8); }
  void f32(float v) {
    std::uint32_t bits = 0;
    std::memcpy(&bits, &v, sizeof bits);
    u32(bits);
  }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  void le(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::vector<std::uint8_t> bytes_;
};

class ByteReader {
 public:
  ByteReader(std::span<const std::uint8_t> bytes, std::string_view what)
      : bytes_(bytes), what_(what) {}

  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

  std::string magic() {
    need(4, "magic");
    std::string m(reinterpret_cast<const char*>(bytes_.data() + pos_), 4);
    pos_ += 4;
    return m;
  }
  std::uint8_t u8(const char* field) { return static_cast<std::uint8_t>(le(1, field)); }
  std::uint16_t u16(const char* field) { return static_cast<std::uint16_t>(le(2, field)); }
  std::uint32_t u32(const char* field) { return static_cast<std::uint32_t>(le(4, field)); }
  std::uint64_t u64(const char* field) { return le(8, field); }
  float f32(const char* field) {
    const auto bits = static_cast<std::uint32_t>(le(4, field));
    float v = 0.0f;
    std::memcpy(&v, &bits, sizeof v);
    return v;
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    throw_parse(std::string(what_) + " at byte offset " + std::to_string(offset) + ": " +
                message);
  }

 private:
  void need(std::size_t n, const char* field) const {
    if (remaining() < n) {
      fail("truncated while reading " + std::string(field) + " (need " + std::to_string(n) +
           " bytes, " + std::to_string(remaining()) + " left)");
    }
  }
  std::uint64_t le(int n, const char* field) {
    need(static_cast<std::size_t>(n), field);
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += static_cast<std::size_t>(n);
    return v;
  }

  std::span<const std::uint8_t> bytes_;
  std::string_view what_;
  std::size_t pos_ = 0;
};

std::string printable_magic(const std::string& m) {
  std::string out;
  for (char c : m) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7f) {
      out += c;
    } else {
      char buf[5];
      std::snprintf(buf, sizeof buf, "\\x%02x", u);
      out += buf;
    }
  }
  return out;
}

// Shared validation for decoded events; `where(i)` describes event i.
template <typename Where>
void validate_stream(const EventStream& s, Where&& where) {
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    const Event& e = s.events[i];
    if (e.x >= s.width || e.y >= s.height) {
      where(i, "coordinates (" + std::to_string(e.x) + ", " + std::to_string(e.y) +
                   ") outside the " + std::to_string(s.width) + "x" +
                   std::to_string(s.height) + " sensor");
    }
    if (e.p > 1) where(i, "polarity " + std::to_string(e.p) + " is not 0 or 1");
    if (e.t < s.t_start || e.t > s.t_end) {
      where(i, "timestamp " + std::to_string(e.t) + " outside window [" +
                   std::to_string(s.t_start) + ", " + std::to_string(s.t_end) + "]");
    }
    if (i > 0 && e.t < s.events[i - 1].t) {
      where(i, "timestamp " + std::to_string(e.t) + " decreases (previous " +
                   std::to_string(s.events[i - 1].t) + ")");
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
bool parse_uint(std::string_view s, T& out) {
  s = trim(s);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<std::uint8_t> encode_events(const EventStream& stream) {
  if (stream.width > std::numeric_limits<std::uint16_t>::max() ||
      stream.height > std::numeric_limits<std::uint16_t>::max()) {
    throw_data("sensor dimensions exceed the 16-bit event file fields");
  }
  ByteWriter w(kEventHeaderBytes + kEventRecordBytes * stream.events.size());
  w.raw(kEventMagic);
  w.u16(kEventFormatVersion);
  w.u16(static_cast<std::uint16_t>(stream.width));
  w.u16(static_cast<std::uint16_t>(stream.height));
  w.u64(stream.events.size());
  w.u64(stream.t_start);
  w.u64(stream.t_end);
  for (const Event& e : stream.events) {
    w.u16(e.x);
    w.u16(e.y);
    w.u64(e.t);
    w.u8(e.p);
  }
  return w.take();
}

EventStream decode_events(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes, "event file");
  const std::string magic = r.magic();
  if (magic != std::string_view(kEventMagic, 4)) {
    r.fail_at(0, "bad magic \"" + printable_magic(magic) + "\", expected \"EVS1\"");
  }
  const std::uint16_t version = r.u16("version");
  if (version != kEventFormatVersion) {
    r.fail_at(4, "unsupported version " + std::to_string(version));
  }
  EventStream s;
  s.width = r.u16("width");
  s.height = r.u16("height");
  const std::uint64_t count = r.u64("count");
  s.t_start = r.u64("t_start");
  s.t_end = r.u64("t_end");
  if (s.t_start >= s.t_end) r.fail_at(26, "window requires t_start < t_end");
  if (count > r.remaining() / kEventRecordBytes) {
    r.fail("truncated: header declares " + std::to_string(count) + " events but only " +
           std::to_string(r.remaining()) + " bytes follow");
  }
  s.events.resize(static_cast<std::size_t>(count));
  for (Event& e : s.events) {
    e.x = r.u16("x");
    e.y = r.u16("y");
    e.t = r.u64("t");
    e.p = r.u8("p");
  }
  if (r.remaining() != 0) {
    r.fail(std::to_string(r.remaining()) + " trailing bytes after " + std::to_string(count) +
           " events");
  }
  validate_stream(s, [&](std::size_t i, const std::string& msg) {
    r.fail_at(kEventHeaderBytes + i * kEventRecordBytes,
              "event " + std::to_string(i) + ": " + msg);
  });
  return s;
}

std::vector<std::uint8_t> encode_histogram(const EventHistogram& hist) {
  ByteWriter w(kHistogramHeaderBytes + 4 * hist.size());
  w.raw(kHistogramMagic);
  w.u16(kHistogramFormatVersion);
  w.u32(static_cast<std::uint32_t>(hist.timesteps()));
  w.u32(static_cast<std::uint32_t>(EventHistogram::kChannels));
  w.u32(static_cast<std::uint32_t>(hist.height()));
  w.u32(static_cast<std::uint32_t>(hist.width()));
  for (float v : hist.data()) w.f32(v);
  return w.take();
}

EventHistogram decode_histogram(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes, "histogram file");
  const std::string magic = r.magic();
  if (magic != std::string_view(kHistogramMagic, 4)) {
    r.fail_at(0, "bad magic \"" + printable_magic(magic) + "\", expected \"EVH1\"");
  }
  const std::uint16_t version = r.u16("version");
  if (version != kHistogramFormatVersion) {
    r.fail_at(4, "unsupported version " + std::to_string(version));
  }
  const std::uint32_t t = r.u32("T");
  const std::uint32_t c = r.u32("C");
  const std::uint32_t h = r.u32("H");
  const std::uint32_t w = r.u32("W");
  if (c != EventHistogram::kChannels) {
    r.fail_at(10, "channel count " + std::to_string(c) + " (must be 2)");
  }
  __extension__ using u128 = unsigned __int128;
  const u128 cells = static_cast<u128>(t) * c * h * w;
  if (cells * 4 > r.remaining()) {
    r.fail("truncated: shape (" + std::to_string(t) + ", 2, " + std::to_string(h) + ", " +
           std::to_string(w) + ") needs " + std::to_string(static_cast<std::uint64_t>(cells * 4)) +
           " data bytes, " + std::to_string(r.remaining()) + " present");
  }
  EventHistogram hist(t, h, w);
  for (float& v : hist.data()) v = r.f32("cell");
  if (r.remaining() != 0) {
    r.fail(std::to_string(r.remaining()) + " trailing bytes after tensor data");
  }
  return hist;
}

std::string encode_events_csv(const EventStream& stream) {
  std::string out = "# width=" + std::to_string(stream.width) +
                    " height=" + std::to_string(stream.height) +
                    " t_start=" + std::to_string(stream.t_start) +
                    " t_end=" + std::to_string(stream.t_end) + "\nx,y,t,p\n";
  out.reserve(out.size() + stream.events.size() * 16);
  for (const Event& e : stream.events) {
    out += std::to_string(e.x);
    out += ',';
    out += std::to_string(e.y);
    out += ',';
    out += std::to_string(e.t);
    out += ',';
    out += std::to_string(e.p);
    out += '\n';
  }
  return out;
}

EventStream decode_events_csv(std::string_view text) {
  std::size_t line_no = 0;
  const auto fail = [&](std::size_t line, const std::string& msg) {
    throw_parse("event csv line " + std::to_string(line) + ": " + msg);
  };
  EventStream s;
  bool have_meta = false;
  bool have_header = false;
  std::vector<std::size_t> event_lines;

  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;

    if (!have_header) {
      if (line.front() == '#') {
        std::string_view body = trim(line.substr(1));
        if (body.empty()) continue;
        bool seen[4] = {false, false, false, false};
        for (std::string_view tok : split(body, ' ')) {
          tok = trim(tok);
          if (tok.empty()) continue;
          const std::size_t eq = tok.find('=');
          if (eq == std::string_view::npos) fail(line_no, "expected key=value, got \"" + std::string(tok) + "\"");
          const std::string_view key = tok.substr(0, eq);
          const std::string_view val = tok.substr(eq + 1);
          int slot = -1;
          bool ok = false;
          if (key == "width") {
            slot = 0;
            ok = parse_uint(val, s.width);
          } else if (key == "height") {
            slot = 1;
            ok = parse_uint(val, s.height);
          } else if (key == "t_start") {
            slot = 2;
            ok = parse_uint(val, s.t_start);
          } else if (key == "t_end") {
            slot = 3;
            ok = parse_uint(val, s.t_end);
          } else {
            fail(line_no, "unknown metadata key \"" + std::string(key) + "\"");
          }
          seen[slot] = true;
          if (!ok) fail(line_no, "bad value for " + std::string(key));
        }
        if (!(seen[0] && seen[1] && seen[2] && seen[3])) {
          fail(line_no, "metadata needs width, height, t_start and t_end");
        }
        if (s.t_start >= s.t_end) fail(line_no, "window requires t_start < t_end");
        have_meta = true;
        continue;
      }
      if (line != "x,y,t,p") {
        fail(line_no, "expected header \"x,y,t,p\", got \"" + std::string(line.substr(0, 40)) + "\"");
      }
      have_header = true;
      continue;
    }

    const std::vector<std::string_view> f = split(line, ',');
    if (f.size() != 4) fail(line_no, "expected 4 fields, got " + std::to_string(f.size()));
    Event e;
    unsigned p = 0;
    if (!parse_uint(f[0], e.x)) fail(line_no, "bad x \"" + std::string(f[0]) + "\"");
    if (!parse_uint(f[1], e.y)) fail(line_no, "bad y \"" + std::string(f[1]) + "\"");
    if (!parse_uint(f[2], e.t)) fail(line_no, "bad t \"" + std::string(f[2]) + "\"");
    if (!parse_uint(f[3], p) || p > 1) fail(line_no, "bad polarity \"" + std::string(f[3]) + "\"");
    e.p = static_cast<std::uint8_t>(p);
    s.events.push_back(e);
    event_lines.push_back(line_no);
  }
  if (!have_header) fail(line_no, "missing header \"x,y,t,p\"");

  if (!have_meta) {
    s.width = 0;
    s.height = 0;
    for (const Event& e : s.events) {
      s.width = std::max<std::uint32_t>(s.width, e.x + 1u);
      s.height = std::max<std::uint32_t>(s.height, e.y + 1u);
    }
    s.t_start = s.events.empty() ? 0 : s.events.front().t;
    s.t_end = s.events.empty() ? 1 : s.events.back().t + 1;
    if (!s.events.empty() && s.events.back().t < s.t_start) s.t_end = s.t_start + 1;
  }
  validate_stream(s, [&](std::size_t i, const std::string& msg) {
    fail(event_lines[i], msg);
  });
  return s;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_io("cannot open " + path.string() + " for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw_io("failed reading " + path.string());
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path,
                      std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw_io("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw_io("failed writing " + path.string());
}

void write_events(const EventStream& stream, const std::filesystem::path& path) {
  write_file_bytes(path, encode_events(stream));
}

void write_events_csv(const EventStream& stream, const std::filesystem::path& path) {
  const std::string text = encode_events_csv(stream);
  write_file_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                                   text.size()));
}

EventStream read_events(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = read_file_bytes(path);
  const bool textual = !bytes.empty() && (bytes[0] == '#' || bytes[0] == 'x');
  if (textual) {
    return decode_events_csv(
        std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  }
  return decode_events(bytes);
}

void write_histogram(const EventHistogram& hist, const std::filesystem::path& path) {
  write_file_bytes(path, encode_histogram(hist));
}

EventHistogram read_histogram(const std::filesystem::path& path) {
  return decode_histogram(read_file_bytes(path));
}

}  // namespace evaug
