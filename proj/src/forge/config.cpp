// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/forge/config.hpp"

#include <string>
#include <vector>

#include "posterkit/core/errors.hpp"

namespace posterkit::forge {
namespace {

void require(bool ok, const char* what) {
  if (!ok) {
    throw ConfigError(std::string("generation config: ") + what);
  }
}

bool valid_weights(const std::array<double, 3>& w) {
  double sum = 0.0;
  for (double v : w) {
    if (!(v >= 0.0)) {
      return false;
    }
    sum += v;
  }
  return sum > 0.0;
}

struct FieldReader {
  const Json& doc;
  std::vector<std::string> seen;

  void mark(const char* key) { seen.emplace_back(key); }

  void read(const char* key, double& target) {
    mark(key);
    if (!doc.contains(key)) {
      return;
    }
    if (!doc[key].is_number()) {
      throw ConfigError(std::string("generation config: '") + key + "' must be a number");
    }
    target = doc[key].get<double>();
  }

  void read(const char* key, int& target) {
    mark(key);
    if (!doc.contains(key)) {
      return;
    }
    if (!doc[key].is_number_integer()) {
      throw ConfigError(std::string("generation config: '") + key + "' must be an integer");
    }
    target = doc[key].get<int>();
  }

  void read(const char* key, std::array<double, 3>& target) {
    mark(key);
    if (!doc.contains(key)) {
      return;
    }
    const Json& value = doc[key];
    if (!value.is_array() || value.size() != 3) {
      throw ConfigError(std::string("generation config: '") + key +
                        "' must be an array of 3 numbers");
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (!value[i].is_number()) {
        throw ConfigError(std::string("generation config: '") + key +
                          "' must be an array of 3 numbers");
      }
      target[i] = value[i].get<double>();
    }
  }

  void reject_unknown() const {
    for (const auto& [key, value] : doc.items()) {
      (void)value;
      bool known = false;
      for (const std::string& name : seen) {
        known = known || name == key;
      }
      if (!known) {
        throw ConfigError("generation config: unknown key '" + key + "'");
      }
    }
  }
};

}  // namespace

GenerationConfig generation_config_from_json(const Json& doc) {
  if (!doc.is_object()) {
    throw ConfigError("generation config must be a JSON object");
  }
  GenerationConfig config;
  FieldReader reader{doc, {}};
  reader.read("instance_count_weights", config.instance_count_weights);
  reader.read("alphanumeric_fraction", config.alphanumeric_fraction);
  reader.read("stylized_font_fraction", config.stylized_font_fraction);
  reader.read("font_mention_probability", config.font_mention_probability);
  reader.read("rotation_probability", config.rotation_probability);
  reader.read("rotation_min_deg", config.rotation_min_deg);
  reader.read("rotation_max_deg", config.rotation_max_deg);
  reader.read("max_placement_attempts", config.max_placement_attempts);
  reader.read("canvas_width", config.canvas_width);
  reader.read("canvas_height", config.canvas_height);
  reader.read("orientation_weights", config.orientation_weights);
  reader.read("font_size_min_px", config.font_size_min_px);
  reader.read("font_size_max_px", config.font_size_max_px);
  reader.read("wrap_width_fraction", config.wrap_width_fraction);
  reader.read("max_wrap_lines", config.max_wrap_lines);
  reader.read("collision_padding_px", config.collision_padding_px);
  reader.read("retry_font_scale", config.retry_font_scale);
  reader.read("color_jitter", config.color_jitter);
  reader.reject_unknown();
  config.validate();
  return config;
}

void GenerationConfig::validate() const {
  require(valid_weights(instance_count_weights),
          "instance count weights must be nonnegative with a positive sum");
  require(valid_weights(orientation_weights),
          "orientation weights must be nonnegative with a positive sum");
  require(alphanumeric_fraction >= 0.0 && alphanumeric_fraction <= 1.0,
          "alphanumeric fraction must lie in [0, 1]");
  require(stylized_font_fraction >= 0.0 && stylized_font_fraction <= 1.0,
          "stylized font fraction must lie in [0, 1]");
  require(font_mention_probability >= 0.0 && font_mention_probability <= 1.0,
          "font mention probability must lie in [0, 1]");
  require(rotation_probability >= 0.0 && rotation_probability <= 1.0,
          "rotation probability must lie in [0, 1]");
  require(rotation_min_deg <= rotation_max_deg,
          "rotation range must be ordered");
  require(max_placement_attempts >= 1,
          "at least one placement attempt is required");
  require(canvas_width >= 64 && canvas_height >= 64,
          "canvas must be at least 64x64");
  require(font_size_min_px >= 8, "minimum font size must be at least 8px");
  require(font_size_max_px >= font_size_min_px,
          "font size range must be ordered");
  require(wrap_width_fraction > 0.0 && wrap_width_fraction <= 1.0,
          "wrap width fraction must lie in (0, 1]");
  require(max_wrap_lines >= 1, "at least one wrap line is required");
  require(collision_padding_px >= 0, "collision padding must be nonnegative");
  require(retry_font_scale > 0.0 && retry_font_scale <= 1.0,
          "retry font scale must lie in (0, 1]");
  require(color_jitter >= 0, "color jitter must be nonnegative");
}

}  // namespace posterkit::forge
