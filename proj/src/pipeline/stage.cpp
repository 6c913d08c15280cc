// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/pipeline/stage.hpp"

#include <utility>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/fsutil.hpp"

namespace posterkit::pipeline {

namespace {

constexpr const char* kConfigSchema = "posterkit.stage-config";

const struct {
  Stage stage;
  const char* name;
} kStageNames[] = {
    {Stage::Forge, "forge"},         {Stage::Curate, "curate"},
    {Stage::Pairs, "pairs"},         {Stage::Reflect, "reflect"},
    {Stage::OcrEval, "ocr-eval"},    {Stage::LossCheck, "losscheck"},
};

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::filesystem::path& path) {
  if (path.empty() || path.is_absolute()) {
    return path;
  }
  return base / path;
}

}  // namespace

const char* stage_name(Stage stage) {
  for (const auto& entry : kStageNames) {
    if (entry.stage == stage) {
      return entry.name;
    }
  }
  return "unknown";
}

Stage stage_from_name(const std::string& name) {
  for (const auto& entry : kStageNames) {
    if (name == entry.name) {
      return entry.stage;
    }
  }
  throw ConfigError("unknown stage: '" + name + "'");
}

StageConfig parse_stage_config(const Json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) {
    throw ConfigError("stage config must be a JSON object");
  }
  if (!doc.contains("schema") || !doc["schema"].is_string() ||
      doc["schema"].get<std::string>() != kConfigSchema) {
    throw ConfigError(std::string("stage config: expected schema '") + kConfigSchema + "'");
  }
  if (doc.contains("version") &&
      (!doc["version"].is_number_integer() || doc["version"].get<int>() != 1)) {
    throw ConfigError("stage config: unsupported version");
  }
  if (!doc.contains("stage") || !doc["stage"].is_string()) {
    throw ConfigError("stage config: 'stage' must be a string");
  }

  StageConfig config;
  config.stage = stage_from_name(doc["stage"].get<std::string>());

  if (doc.contains("input")) {
    if (!doc["input"].is_string()) {
      throw ConfigError("stage config: 'input' must be a string path");
    }
    config.input_path = resolve(base_dir, doc["input"].get<std::string>());
  }
  if (!doc.contains("output") || !doc["output"].is_string()) {
    throw ConfigError("stage config: 'output' must be a string path");
  }
  config.output_path = resolve(base_dir, doc["output"].get<std::string>());

  if (doc.contains("workers")) {
    if (!doc["workers"].is_number_integer()) {
      throw ConfigError("stage config: 'workers' must be an integer");
    }
    config.worker_count = doc["workers"].get<int>();
  }
  if (doc.contains("seed")) {
    const Json& seed = doc["seed"];
    if (seed.is_number_unsigned()) {
      config.master_seed = seed.get<std::uint64_t>();
    } else if (seed.is_number_integer() && seed.get<std::int64_t>() >= 0) {
      config.master_seed = static_cast<std::uint64_t>(seed.get<std::int64_t>());
    } else {
      throw ConfigError("stage config: 'seed' must be a non-negative integer");
    }
  }
  if (doc.contains("replay_dir")) {
    if (!doc["replay_dir"].is_string()) {
      throw ConfigError("stage config: 'replay_dir' must be a string path");
    }
    config.replay_dir = resolve(base_dir, doc["replay_dir"].get<std::string>());
  }
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) {
      throw ConfigError("stage config: 'params' must be an object");
    }
    config.params = doc["params"];
  }
  config.base_dir = base_dir;

  if (config.output_path.empty()) {
    throw ConfigError("stage config: empty output path");
  }
  if (config.stage != Stage::Forge && config.input_path.empty()) {
    throw ConfigError(std::string("stage config: stage '") + stage_name(config.stage) +
                      "' requires an input path");
  }
  if (!config.input_path.empty() &&
      std::filesystem::weakly_canonical(config.input_path) ==
          std::filesystem::weakly_canonical(config.output_path)) {
    throw ConfigError("stage config: output path must differ from input path");
  }
  if (config.worker_count < 1) {
    throw ConfigError("stage config: 'workers' must be >= 1");
  }
  return config;
}

StageConfig load_stage_config(const std::filesystem::path& file) {
  const Json doc = parse_json(read_file(file), file.string());
  return parse_stage_config(doc, file.parent_path());
}

void apply_overrides(StageConfig& config, const StageOverrides& overrides) {
  if (overrides.seed) {
    config.master_seed = *overrides.seed;
  }
  if (overrides.workers) {
    if (*overrides.workers < 1) {
      throw ConfigError("workers override must be >= 1");
    }
    config.worker_count = *overrides.workers;
  }
  if (overrides.replay_dir) {
    config.replay_dir = *overrides.replay_dir;
  }
}

Json StageReport::to_json() const {
  Json doc;
  doc["stage"] = stage_name(stage);
  doc["input_count"] = input_count;
  doc["accepted"] = accepted;
  Json rej = Json::object();
  for (const auto& [reason, count] : rejections) {
    rej[reason] = count;
  }
  doc["rejections"] = std::move(rej);
  doc["manifest_digest"] = manifest_digest;
  doc["output"] = output_path.string();
  return doc;
}

StageReport run_stage(const StageConfig& config) {
  switch (config.stage) {
    case Stage::Forge:
      return run_forge_stage(config);
    case Stage::Curate:
      return run_curate_stage(config);
    case Stage::Pairs:
      return run_pairs_stage(config);
    case Stage::Reflect:
      return run_reflect_stage(config);
    case Stage::OcrEval:
      return run_ocr_eval_stage(config);
    case Stage::LossCheck:
      return run_losscheck_stage(config);
  }
  throw ConfigError("unhandled stage");
}

std::unique_ptr<VlmClient> make_vlm_client(const StageConfig& config,
                                           const std::filesystem::path& capture_dir) {
  if (config.replay_dir) {
    return std::make_unique<ReplayClient>(*config.replay_dir);
  }
  return std::make_unique<LiveClient>(live_options_from_env(capture_dir));
}

}  // namespace posterkit::pipeline
