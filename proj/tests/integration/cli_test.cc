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

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "evaug/config.h"
#include "evaug/event_core.h"
#include "evaug/io_formats.h"
#include "evaug/pipeline.h"
#include "evaug/random.h"
#include "evaug/version.h"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(EVAUG_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::map<std::string, std::string> key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

std::size_t count_files(const fs::path& dir, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (name.rfind(prefix, 0) == 0 && e.path().extension() == ".png") ++n;
  }
  return n;
}

evaug::EventHistogram random_histogram(std::size_t t, std::size_t h, std::size_t w,
                                       std::uint64_t seed) {
  evaug::EventHistogram hist(t, h, w);
  evaug::Rng rng = evaug::Rng::for_sample(seed, 99);
  for (float& v : hist.data()) v = static_cast<float>(rng.uniform_int(0, 3));
  return hist;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("evaug_cli_") + info->name() + "_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }
  std::string arg(const std::string& name) const { return "'" + path(name).string() + "'"; }

  fs::path dir_;
};

TEST_F(CliTest, VersionMatchesLibrary) {
  const RunResult r = run("--version");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, evaug::version_string() + "\n");
}

TEST_F(CliTest, ModeNoneLeavesHistogramUnchanged) {
  const auto hist = random_histogram(10, 24, 32, 1);
  evaug::write_histogram(hist, path("in.evh"));
  const RunResult r = run("augment --input " + arg("in.evh") + " --output " +
                          arg("out") + " --mode none --seed 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(evaug::read_histogram(path("out/in.evh")), hist);
}

TEST_F(CliTest, SameSeedGivesIdenticalBytes) {
  evaug::write_histogram(random_histogram(10, 40, 40, 2), path("in.evh"));
  const std::string base = "augment --input " + arg("in.evh") + " --seed 7 --output ";
  ASSERT_EQ(run(base + arg("a")).status, 0);
  ASSERT_EQ(run(base + arg("b")).status, 0);
  const auto a = evaug::read_file_bytes(path("a/in.evh"));
  EXPECT_EQ(a, evaug::read_file_bytes(path("b/in.evh")));
  EXPECT_NE(a, evaug::read_file_bytes(path("in.evh")));
}

TEST_F(CliTest, OutputShapeFollowsInputAndTimesteps) {
  evaug::write_histogram(evaug::EventHistogram(10, 80, 80), path("in.evh"));
  const RunResult r = run("augment --input " + arg("in.evh") + " --output " +
                          arg("out") + " --smax 30 --timesteps 10");
  ASSERT_EQ(r.status, 0);
  const auto bytes = evaug::read_file_bytes(path("out/in.evh"));
  ASSERT_GE(bytes.size(), evaug::kHistogramHeaderBytes);
  const auto out = evaug::decode_histogram(bytes);
  EXPECT_EQ(out.timesteps(), 10u);
  EXPECT_EQ(out.height(), 80u);
  EXPECT_EQ(out.width(), 80u);
  EXPECT_EQ(bytes.size(), evaug::kHistogramHeaderBytes + 10 * 2 * 80 * 80 * 4);
}

TEST_F(CliTest, EventInputIsBinnedAndResized) {
  evaug::EventStream s;
  s.width = 40;
  s.height = 30;
  s.t_start = 0;
  s.t_end = 1000;
  for (std::uint16_t i = 0; i < 200; ++i) {
    s.events.push_back({static_cast<std::uint16_t>(i % 40),
                        static_cast<std::uint16_t>(i % 30),
                        static_cast<std::uint64_t>(i * 5), static_cast<std::uint8_t>(i % 2)});
  }
  evaug::write_events(s, path("rec.evs"));
  const RunResult r = run("augment --input " + arg("rec.evs") + " --output " +
                          arg("out") + " --mode none --timesteps 4 --resize 15x20");
  ASSERT_EQ(r.status, 0);
  const auto expected =
      evaug::resize_bilinear(evaug::build_histogram(s, 4), 15, 20);
  EXPECT_EQ(evaug::read_histogram(path("out/rec.evh")), expected);
}

TEST_F(CliTest, HistogramTimestepsAdoptedUnlessGiven) {
  evaug::write_histogram(random_histogram(6, 20, 20, 3), path("in.evh"));
  EXPECT_EQ(run("augment --input " + arg("in.evh") + " --output " + arg("o1")).status, 0);
  EXPECT_EQ(evaug::read_histogram(path("o1/in.evh")).timesteps(), 6u);
  EXPECT_EQ(run("augment --input " + arg("in.evh") + " --output " + arg("o2") +
                " --timesteps 10").status, 1);
}

TEST_F(CliTest, DirectoryUsesLexicographicSampleIndex) {
  fs::create_directories(path("in"));
  const auto hist = random_histogram(10, 32, 32, 4);
  for (const char* name : {"c.evh", "a.evh", "b.evh"}) {
    evaug::write_histogram(hist, path("in") / name);
  }
  ASSERT_EQ(run("augment --input " + arg("in") + " --output " + arg("out") +
                " --seed 11 --threads 2").status, 0);
  evaug::AugConfig cfg;
  cfg.seed = 11;
  std::size_t index = 0;
  for (const char* name : {"a.evh", "b.evh", "c.evh"}) {
    EXPECT_EQ(evaug::read_histogram(path("out") / name), evaug::augment(hist, cfg, index))
        << name;
    ++index;
  }
}

TEST_F(CliTest, ArrayInterfaceMatchesFileOutput) {
  const auto hist = random_histogram(10, 36, 28, 5);
  evaug::write_histogram(hist, path("in.evh"));
  ASSERT_EQ(run("augment --input " + arg("in.evh") + " --output " + arg("out") +
                " --seed 21 --smax 20").status, 0);
  evaug::AugConfig cfg;
  cfg.seed = 21;
  cfg.s_max = 20;
  const auto arr = evaug::augment_array(hist.data(), 10, 36, 28, cfg, 0);
  const auto file = evaug::read_histogram(path("out/in.evh"));
  ASSERT_EQ(arr.size(), file.data().size());
  EXPECT_TRUE(std::equal(arr.begin(), arr.end(), file.data().begin()));
}

TEST_F(CliTest, FlagsOverrideConfigFile) {
  const auto hist = random_histogram(10, 24, 24, 6);
  evaug::write_histogram(hist, path("in.evh"));
  std::ofstream(path("none.cfg")) << "mode = none\nseed = 5\n";
  std::ofstream(path("pp.cfg")) << "mode = shapeaugpp\nseed = 5\n";
  ASSERT_EQ(run("augment --input " + arg("in.evh") + " --output " + arg("a") +
                " --config " + arg("none.cfg")).status, 0);
  EXPECT_EQ(evaug::read_histogram(path("a/in.evh")), hist);
  ASSERT_EQ(run("augment --input " + arg("in.evh") + " --output " + arg("b") +
                " --config " + arg("pp.cfg") + " --mode none").status, 0);
  EXPECT_EQ(evaug::read_histogram(path("b/in.evh")), hist);
  ASSERT_EQ(run("augment --input " + arg("in.evh") + " --output " + arg("c") +
                " --config " + arg("none.cfg") + " --mode shapeaugpp").status, 0);
  evaug::AugConfig cfg;
  cfg.seed = 5;
  EXPECT_EQ(evaug::read_histogram(path("c/in.evh")), evaug::augment(hist, cfg, 0));
}

TEST_F(CliTest, ExitCodes) {
  evaug::write_histogram(random_histogram(10, 16, 16, 7), path("in.evh"));
  std::ofstream(path("junk.evh")) << "EVH1 not really";
  std::ofstream(path("bad.cfg")) << "s_max = -3\n";
  const std::string in = " --input " + arg("in.evh") + " --output " + arg("o");
  EXPECT_EQ(run("augment --input " + arg("missing.evh") + " --output " + arg("o")).status, 2);
  EXPECT_EQ(run("augment" + in + " --mode sideways").status, 1);
  EXPECT_EQ(run("augment" + in + " --frobnicate").status, 1);
  EXPECT_EQ(run("augment --output " + arg("o")).status, 1);
  EXPECT_EQ(run("augment" + in + " --config " + arg("bad.cfg")).status, 1);
  EXPECT_EQ(run("augment" + in + " --config " + arg("nope.cfg")).status, 2);
  EXPECT_EQ(run("augment" + in + " --smin 40 --smax 10").status, 1);
  EXPECT_EQ(run("augment --input " + arg("junk.evh") + " --output " + arg("o")).status, 1);
  EXPECT_EQ(run("bench --size 80by80").status, 1);
}

TEST_F(CliTest, ErrorsKeepStdoutEmpty) {
  const RunResult r = run("augment --input " + arg("missing.evh") + " --output " + arg("o"));
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, VisualizeWritesOnePngPerTimestep) {
  evaug::write_histogram(random_histogram(10, 30, 30, 8), path("in.evh"));
  ASSERT_EQ(run("visualize --input " + arg("in.evh") + " --output " + arg("v")).status, 0);
  EXPECT_EQ(count_files(path("v"), ""), 10u);
  ASSERT_EQ(run("visualize --augment --seed 2 --input " + arg("in.evh") + " --output " +
                arg("w")).status, 0);
  EXPECT_EQ(count_files(path("w"), ""), 30u);
  EXPECT_EQ(count_files(path("w"), "input_"), 10u);
  EXPECT_EQ(count_files(path("w"), "frames_"), 10u);
  EXPECT_EQ(count_files(path("w"), "events_"), 10u);
}

TEST_F(CliTest, VisualizeIsDeterministic) {
  evaug::write_histogram(random_histogram(10, 30, 30, 9), path("in.evh"));
  for (const char* out : {"a", "b"}) {
    ASSERT_EQ(run("visualize --augment --seed 4 --input " + arg("in.evh") +
                  " --output " + arg(out)).status, 0);
  }
  for (const auto& e : fs::directory_iterator(path("a"))) {
    EXPECT_EQ(evaug::read_file_bytes(e.path()),
              evaug::read_file_bytes(path("b") / e.path().filename()))
        << e.path().filename();
  }
}

TEST_F(CliTest, VisualizeEmptyHistogramIsNeutral) {
  evaug::write_histogram(evaug::EventHistogram(3, 8, 8), path("in.evh"));
  ASSERT_EQ(run("visualize --input " + arg("in.evh") + " --output " + arg("v")).status, 0);
  const auto first = evaug::read_file_bytes(path("v/input_0000.png"));
  EXPECT_EQ(first, evaug::read_file_bytes(path("v/input_0001.png")));
  EXPECT_EQ(first, evaug::read_file_bytes(path("v/input_0002.png")));
}

TEST_F(CliTest, BenchSingleIteration) {
  const RunResult r = run("bench --size 32x32 --timesteps 4 --iterations 1");
  ASSERT_EQ(r.status, 0);
  const auto kv = key_values(r.out);
  EXPECT_EQ(kv.at("samples"), "1");
  EXPECT_LE(std::stod(kv.at("stage_sum_seconds")), std::stod(kv.at("total_seconds")));
  EXPECT_GT(std::stod(kv.at("samples_per_sec")), 0.0);
}

TEST_F(CliTest, BenchChecksumIndependentOfThreads) {
  const std::string base = "bench --size 80x80 --timesteps 10 --iterations 40 --seed 3";
  const RunResult one = run(base + " --threads 1");
  const RunResult four = run(base + " --threads 4");
  ASSERT_EQ(one.status, 0);
  ASSERT_EQ(four.status, 0);
  const auto a = key_values(one.out);
  const auto b = key_values(four.out);
  EXPECT_EQ(a.at("checksum"), b.at("checksum"));
  EXPECT_EQ(b.at("threads"), "4");
  EXPECT_LE(std::stod(a.at("stage_sum_seconds")), std::stod(a.at("total_seconds")));
  for (const char* key : {"stage_scene_gen_seconds", "stage_raster_seconds",
                          "stage_diff_seconds", "stage_noise_seconds",
                          "stage_mask_seconds"}) {
    EXPECT_TRUE(a.contains(key)) << key;
  }
}

TEST_F(CliTest, GenSceneDumpIsDeterministic) {
  for (const char* out : {"a", "b"}) {
    ASSERT_EQ(run("gen-scene --seed 13 --size 64x48 --timesteps 5 --output " +
                  arg(out)).status, 0);
  }
  const auto a = evaug::read_file_bytes(path("a/scene.txt"));
  EXPECT_EQ(a, evaug::read_file_bytes(path("b/scene.txt")));
  EXPECT_EQ(count_files(path("a"), "frame_"), 6u);
}

TEST_F(CliTest, GenSceneRespectsShapeLimitAndVertexCounts) {
  ASSERT_EQ(run("gen-scene --seed 2 --max-shapes 1 --output " + arg("one")).status, 0);
  std::ifstream one(path("one/scene.txt"));
  const std::string text((std::istreambuf_iterator<char>(one)), {});
  EXPECT_NE(text.find("\nshapes 1\n"), std::string::npos);

  const std::regex vertices("vertices=(\\d+)");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::string out = "s" + std::to_string(seed);
    ASSERT_EQ(run("gen-scene --seed " + std::to_string(seed) + " --output " + arg(out)).status, 0);
    std::ifstream in(path(out) / "scene.txt");
    const std::string dump((std::istreambuf_iterator<char>(in)), {});
    for (std::sregex_iterator it(dump.begin(), dump.end(), vertices), end; it != end; ++it) {
      const int n = std::stoi((*it)[1]);
      EXPECT_GE(n, 3);
      EXPECT_LE(n, 10);
    }
  }
}

}  // namespace
