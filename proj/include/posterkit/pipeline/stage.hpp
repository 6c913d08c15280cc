// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "posterkit/core/jsonl.hpp"
#include "posterkit/pipeline/vlm_client.hpp"

namespace posterkit::pipeline {

enum class Stage { Forge, Curate, Pairs, Reflect, OcrEval, LossCheck };

// CLI spellings: forge, curate, pairs, reflect, ocr-eval, losscheck.
const char* stage_name(Stage stage);
Stage stage_from_name(const std::string& name);

struct StageConfig {
  Stage stage = Stage::Forge;
  std::filesystem::path input_path;   // unused by forge, required elsewhere
  std::filesystem::path output_path;
  int worker_count = 1;
  std::uint64_t master_seed = 0;
  std::optional<std::filesystem::path> replay_dir;
  Json params = Json::object();
  // Directory of the config file; path-valued params resolve against it.
  std::filesystem::path base_dir;
};

// Parses a stage-config document. Relative paths are resolved against
// `base_dir` (the directory holding the config file). Structural problems
// raise ConfigError before any stage work happens.
StageConfig parse_stage_config(const Json& doc, const std::filesystem::path& base_dir);
StageConfig load_stage_config(const std::filesystem::path& file);

// Command-line values that take precedence over the config file.
struct StageOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::filesystem::path> replay_dir;
};

void apply_overrides(StageConfig& config, const StageOverrides& overrides);

struct StageReport {
  Stage stage = Stage::Forge;
  std::size_t input_count = 0;
  std::size_t accepted = 0;
  std::map<std::string, std::size_t> rejections;
  std::string manifest_digest;
  std::filesystem::path output_path;

  Json to_json() const;
};

// Executes one stage end to end: validate, process, write the output
// manifest atomically, and summarize. The manifest digest depends only on
// the inputs, the config, and the master seed, never on the worker count.
// Invalid configs, missing inputs, and unparseable upstream manifests throw
// before anything is written.
StageReport run_stage(const StageConfig& config);

StageReport run_forge_stage(const StageConfig& config);
StageReport run_curate_stage(const StageConfig& config);
StageReport run_pairs_stage(const StageConfig& config);
StageReport run_reflect_stage(const StageConfig& config);
StageReport run_ocr_eval_stage(const StageConfig& config);
StageReport run_losscheck_stage(const StageConfig& config);

// Replay client when the config carries a replay directory, otherwise a live
// client configured from the environment. Captures land in `capture_dir`.
std::unique_ptr<VlmClient> make_vlm_client(const StageConfig& config,
                                           const std::filesystem::path& capture_dir);

}  // namespace posterkit::pipeline
