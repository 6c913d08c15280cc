// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

#include "posterkit/core/jsonl.hpp"

namespace posterkit::forge {

// Tunables for sample generation. Defaults give the standard corpus mix:
// uniform instance counts, mostly phrase content with a 15% alphanumeric
// share, an even classic/stylized font split, and occasional small rotation.
struct GenerationConfig {
  std::array<double, 3> instance_count_weights = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  double alphanumeric_fraction = 0.15;
  double stylized_font_fraction = 0.5;
  double font_mention_probability = 0.5;
  double rotation_probability = 0.10;
  double rotation_min_deg = -15.0;
  double rotation_max_deg = 15.0;
  int max_placement_attempts = 5;
  std::uint64_t master_seed = 0;
  int canvas_width = 1024;
  int canvas_height = 1024;
  // Horizontal, vertically rotated, vertically stacked.
  std::array<double, 3> orientation_weights = {0.70, 0.15, 0.15};
  int font_size_min_px = 28;
  int font_size_max_px = 96;
  double wrap_width_fraction = 0.90;
  int max_wrap_lines = 3;
  int collision_padding_px = 4;
  double retry_font_scale = 0.9;
  int color_jitter = 16;

  // Throws ConfigError on out-of-range values.
  void validate() const;
};

// Builds a config from a JSON object, starting from the defaults above.
// Every field is optional; unknown keys and wrong types raise ConfigError.
// The result is validated before it is returned.
GenerationConfig generation_config_from_json(const Json& doc);

}  // namespace posterkit::forge
