// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
//
// posterkit: one binary, six stages. Every subcommand takes the same four
// flags; the config file carries everything else. The report JSON lands on
// stdout so runs can be chained and diffed; errors go to stderr with exit 1.
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "posterkit/pipeline/manifest.hpp"
#include "posterkit/pipeline/stage.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::string> replay_dir;
};

void add_common_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "Stage config file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", [&args](const CLI::results_t& values) {
        args.seed = std::stoull(values[0]);
        return true;
      },
      "Master seed (overrides the config)")
      ->check(CLI::NonNegativeNumber)
      ->type_name("UINT");
  cmd->add_option("--workers", [&args](const CLI::results_t& values) {
        args.workers = std::stoi(values[0]);
        return true;
      },
      "Worker thread count (overrides the config)")
      ->check(CLI::PositiveNumber)
      ->type_name("INT");
  cmd->add_option("--replay-dir", [&args](const CLI::results_t& values) {
        args.replay_dir = values[0];
        return true;
      },
      "Serve scorer responses from this capture directory instead of the network")
      ->type_name("DIR");
}

int run(posterkit::pipeline::Stage stage, const CommonArgs& args) {
  namespace pk = posterkit::pipeline;
  pk::StageConfig config = pk::load_stage_config(args.config_path);
  if (config.stage != stage) {
    std::cerr << "error: config file is for stage '" << pk::stage_name(config.stage)
              << "', not '" << pk::stage_name(stage) << "'\n";
    return 1;
  }
  pk::StageOverrides overrides;
  overrides.seed = args.seed;
  overrides.workers = args.workers;
  if (args.replay_dir) {
    overrides.replay_dir = *args.replay_dir;
  }
  pk::apply_overrides(config, overrides);

  const pk::StageReport report = pk::run_stage(config);
  std::cout << report.to_json().dump(2) << "\n";
  if (stage == pk::Stage::LossCheck) {
    // One value per line for quick diffing against another implementation.
    const posterkit::JsonlFile manifest =
        pk::load_manifest(report.output_path, pk::schema::kLossReport);
    for (const posterkit::Json& record : manifest.records) {
      if (record.value("status", "") == "ok") {
        std::cout << record["id"].get<std::string>() << "\t"
                  << record["kind"].get<std::string>() << "\t"
                  << posterkit::Json(record["value"]).dump() << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poster dataset toolkit: sample forging, curation, pair building, "
               "and evaluation stages"};
  app.require_subcommand(1);

  struct Sub {
    posterkit::pipeline::Stage stage;
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {posterkit::pipeline::Stage::Forge, "forge",
       "Generate synthetic text-render training samples"},
      {posterkit::pipeline::Stage::Curate, "curate",
       "Deduplicate, score, and annotate a poster manifest"},
      {posterkit::pipeline::Stage::Pairs, "pairs",
       "Build preference pairs from scored candidate sets"},
      {posterkit::pipeline::Stage::Reflect, "reflect",
       "Build reflection pairs from best-of-six candidate sets"},
      {posterkit::pipeline::Stage::OcrEval, "ocr-eval",
       "Score OCR transcripts against ground truth"},
      {posterkit::pipeline::Stage::LossCheck, "losscheck",
       "Evaluate loss kernels on recorded samples"},
  };

  CommonArgs args[6];
  for (std::size_t i = 0; i < 6; ++i) {
    CLI::App* cmd = app.add_subcommand(subs[i].name, subs[i].help);
    add_common_flags(cmd, args[i]);
  }

  CLI11_PARSE(app, argc, argv);

  for (std::size_t i = 0; i < 6; ++i) {
    if (app.get_subcommand(subs[i].name)->parsed()) {
      try {
        return run(subs[i].stage, args[i]);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
    }
  }
  return 1;
}
