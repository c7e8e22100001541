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

#include <CLI11.hpp>

#include <iostream>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "commands.h"
#include "evaug/version.h"

namespace {

using evaug::cli::AugFlags;

void add_aug_flags(CLI::App* cmd, AugFlags& f, bool with_geo = true) {
  cmd->add_option("--config", f.config_path, "key=value config file");
  cmd->add_option("--mode", f.mode, "shapeaugpp | legacy | none")
      ->check(CLI::IsMember({"shapeaugpp", "legacy", "shapeaug_legacy", "none"}));
  cmd->add_option("--smax", f.s_max, "maximum shape size in pixels");
  cmd->add_option("--smin", f.s_min, "minimum shape size in pixels");
  cmd->add_option("--max-shapes", f.max_shapes, "maximum shapes per sample");
  cmd->add_option("--timesteps", f.timesteps, "timestep count T");
  cmd->add_option("--seed", f.seed, "64-bit seed");
  cmd->add_flag("--no-noise", f.no_noise, "disable the event noise model");
  if (with_geo) {
    cmd->add_flag("--geo", f.geometric,
                  "apply pad/crop/flip/rotate before shape augmentation");
  }
}

}  // namespace

int main(int argc, char** argv) {
#if defined(__GLIBC__)
  // Per-sample tensors are a few hundred KiB; keep freed ones in the heap
  // instead of unmapping and faulting them back in on the next sample.
  mallopt(M_MMAP_THRESHOLD, 64 << 20);
  mallopt(M_TRIM_THRESHOLD, 256 << 20);
#endif
  CLI::App app{"evaug: occlusion shape augmentation for event-camera data"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "print version and exit");

  evaug::cli::AugmentArgs augment;
  CLI::App* aug = app.add_subcommand("augment", "augment histogram or event files");
  aug->add_option("--input", augment.input, "input file or directory")->required();
  aug->add_option("--output", augment.output, "output directory")->required();
  aug->add_option("--resize", augment.resize, "resize event inputs to HxW");
  aug->add_option("--threads", augment.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  add_aug_flags(aug, augment.aug);

  evaug::cli::VisualizeArgs vis;
  CLI::App* viz = app.add_subcommand("visualize", "write per-timestep PNGs");
  viz->add_option("--input", vis.input, "histogram or event file")->required();
  viz->add_option("--output", vis.output, "output directory")->required();
  viz->add_option("--resize", vis.resize, "resize event inputs to HxW");
  viz->add_flag("--augment", vis.augment,
                "also write rendered shape frames and simulated events");
  viz->add_option("--index", vis.index, "sample index for the random stream");
  add_aug_flags(viz, vis.aug);

  evaug::cli::BenchArgs bench;
  CLI::App* bch = app.add_subcommand("bench", "measure augmentation throughput");
  bch->add_option("--size", bench.size, "frame size HxW");
  bch->add_option("--iterations", bench.iterations, "augmentations to run")
      ->check(CLI::PositiveNumber);
  bch->add_option("--threads", bench.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  add_aug_flags(bch, bench.aug);

  evaug::cli::GenSceneArgs gen;
  CLI::App* gsc = app.add_subcommand("gen-scene", "dump a random scene and its frames");
  gsc->add_option("--size", gen.size, "frame size HxW");
  gsc->add_option("--output", gen.output, "output directory")->required();
  add_aug_flags(gsc, gen.aug, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return evaug::cli::kExitUsage;
  }

  if (show_version) {
    std::cout << evaug::version_string() << "\n";
    return evaug::cli::kExitOk;
  }
  if (aug->parsed()) return evaug::cli::cmd_augment(augment);
  if (viz->parsed()) return evaug::cli::cmd_visualize(vis);
  if (bch->parsed()) return evaug::cli::cmd_bench(bench);
  if (gsc->parsed()) return evaug::cli::cmd_gen_scene(gen);
  std::cerr << app.help();
  return evaug::cli::kExitUsage;
}
