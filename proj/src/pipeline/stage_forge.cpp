// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <vector>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/image_io.hpp"
#include "posterkit/core/parallel.hpp"
#include "posterkit/forge/engine.hpp"
#include "posterkit/pipeline/manifest.hpp"
#include "posterkit/pipeline/stage.hpp"

#include "stage_util.hpp"

namespace posterkit::pipeline {

namespace {

std::string sample_id(std::uint64_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "tr-%06llu", static_cast<unsigned long long>(index));
  return buf;
}

}  // namespace

StageReport run_forge_stage(const StageConfig& config) {
  const Json& params = config.params;
  check_param_keys(params, {"count", "generation", "backgrounds", "vocab", "fonts", "images"},
                   "forge");

  const std::int64_t count = param_int(params, "count", -1, "forge");
  if (count < 1) {
    throw ConfigError("forge params: 'count' must be a positive integer");
  }

  forge::GenerationConfig gen;
  if (params.contains("generation")) {
    gen = forge::generation_config_from_json(params["generation"]);
  }
  gen.master_seed = config.master_seed;

  forge::Vocabulary vocab = forge::Vocabulary::builtin();
  if (params.contains("vocab")) {
    vocab = forge::Vocabulary::load(
        resolve_param_path(config, param_string(params, "vocab", "", "forge")));
  }

  forge::FontLibrary fonts = forge::FontLibrary::builtin();
  if (params.contains("fonts")) {
    fonts = forge::FontLibrary::load(
        resolve_param_path(config, param_string(params, "fonts", "", "forge")));
  }

  const std::string backgrounds = param_string(params, "backgrounds", "procedural", "forge");
  forge::BackgroundProvider provider =
      backgrounds == "procedural"
          ? forge::BackgroundProvider::procedural()
          : forge::BackgroundProvider::directory(resolve_param_path(config, backgrounds));

  const std::string images_raw = param_string(params, "images", "", "forge");
  const std::filesystem::path images_dir =
      images_raw.empty() ? std::filesystem::path() : resolve_param_path(config, images_raw);

  const forge::ForgeEngine engine(gen, std::move(vocab), std::move(fonts),
                                  std::move(provider));

  if (!images_dir.empty()) {
    std::filesystem::create_directories(images_dir);
  }

  std::vector<Json> records(static_cast<std::size_t>(count));
  parallel_for(static_cast<std::size_t>(count), config.worker_count, [&](std::size_t index) {
    const forge::ForgeSample sample = engine.generate_sample(index);
    const std::string id = sample_id(index);
    Json record = engine.manifest_record(sample, id);
    if (!images_dir.empty()) {
      const std::filesystem::path file = images_dir / (id + ".png");
      write_png(file, sample.image);
      record["image"] = manifest_relative(file, config.output_path);
    }
    records[index] = std::move(record);
  });

  StageReport report;
  report.stage = Stage::Forge;
  report.input_count = static_cast<std::size_t>(count);
  report.accepted = static_cast<std::size_t>(count);
  report.output_path = config.output_path;
  report.manifest_digest = write_manifest(config.output_path, schema::kForge, records);
  return report;
}

}  // namespace posterkit::pipeline
