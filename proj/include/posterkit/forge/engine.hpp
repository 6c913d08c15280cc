// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "posterkit/core/image.hpp"
#include "posterkit/core/jsonl.hpp"
#include "posterkit/core/rng.hpp"
#include "posterkit/forge/config.hpp"
#include "posterkit/forge/font.hpp"
#include "posterkit/forge/types.hpp"
#include "posterkit/forge/vocabulary.hpp"

namespace posterkit::forge {

struct Background {
  std::string id;
  ImageU8 image;
};

// Supplies one background per sample, either from a directory of images or
// synthesized procedurally.
class BackgroundProvider {
 public:
  // Uses the *.png, *.jpg and *.jpeg files under `dir` (sorted by name);
  // each fetch picks one uniformly. Throws ConfigError when none exist.
  static BackgroundProvider directory(const std::filesystem::path& dir);

  // Deterministic gradient-and-blob canvases seeded from the rng stream.
  static BackgroundProvider procedural();

  // Consumes exactly one rng draw. Directory images keep their native size;
  // the renderer center-crops or rejects them against the canvas.
  Background fetch(Rng& rng, int width, int height) const;

 private:
  bool procedural_ = true;
  std::vector<std::filesystem::path> files_;
};

// One generated sample with its ground truth. `requested_count` is the
// instance count drawn before placement; `instances` may hold fewer entries
// when placement dropped some.
struct ForgeSample {
  ImageU8 image;
  std::vector<PlacedInstance> instances;
  std::string prompt;
  std::string background_id;
  std::uint64_t seed = 0;
  int requested_count = 0;
};

// Ties content, fonts, layout, rendering and prompts together. Stateless
// across samples: each sample's rng is seeded from (master_seed, index), so
// any worker can generate any sample and the output never depends on
// scheduling.
class ForgeEngine {
 public:
  ForgeEngine(GenerationConfig config, Vocabulary vocab, FontLibrary fonts,
              BackgroundProvider backgrounds);

  ForgeSample generate_sample(std::uint64_t index) const;

  // The JSONL manifest line for one sample.
  Json manifest_record(const ForgeSample& sample, const std::string& id) const;

  const GenerationConfig& config() const { return config_; }
  const FontLibrary& fonts() const { return fonts_; }

 private:
  GenerationConfig config_;
  Vocabulary vocab_;
  FontLibrary fonts_;
  BackgroundProvider backgrounds_;
};

}  // namespace posterkit::forge
