// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Internal helpers shared by the stage implementations. Not installed.

#include <cstdint>
#include <initializer_list>
#include <string>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/jsonl.hpp"
#include "posterkit/pipeline/stage.hpp"

namespace posterkit::pipeline {

inline void check_param_keys(const Json& params, std::initializer_list<const char*> allowed,
                             const char* stage) {
  for (const auto& [key, value] : params.items()) {
    (void)value;
    bool known = false;
    for (const char* name : allowed) {
      known = known || key == name;
    }
    if (!known) {
      throw ConfigError(std::string(stage) + " params: unknown key '" + key + "'");
    }
  }
}

inline std::string param_string(const Json& params, const char* key,
                                const std::string& fallback, const char* stage) {
  if (!params.contains(key)) {
    return fallback;
  }
  if (!params[key].is_string()) {
    throw ConfigError(std::string(stage) + " params: '" + key + "' must be a string");
  }
  return params[key].get<std::string>();
}

inline std::int64_t param_int(const Json& params, const char* key, std::int64_t fallback,
                              const char* stage) {
  if (!params.contains(key)) {
    return fallback;
  }
  if (!params[key].is_number_integer()) {
    throw ConfigError(std::string(stage) + " params: '" + key + "' must be an integer");
  }
  return params[key].get<std::int64_t>();
}

inline double param_double(const Json& params, const char* key, double fallback,
                           const char* stage) {
  if (!params.contains(key)) {
    return fallback;
  }
  if (!params[key].is_number()) {
    throw ConfigError(std::string(stage) + " params: '" + key + "' must be a number");
  }
  return params[key].get<double>();
}

inline bool param_bool(const Json& params, const char* key, bool fallback, const char* stage) {
  if (!params.contains(key)) {
    return fallback;
  }
  if (!params[key].is_boolean()) {
    throw ConfigError(std::string(stage) + " params: '" + key + "' must be a boolean");
  }
  return params[key].get<bool>();
}

// Path-valued params resolve against the directory of the config file, so a
// config and its data can move together.
inline std::filesystem::path resolve_param_path(const StageConfig& config,
                                                const std::string& path) {
  const std::filesystem::path p(path);
  if (p.empty() || p.is_absolute()) {
    return p;
  }
  return config.base_dir / p;
}

// Paths recorded inside manifests are relative to the manifest file, so a
// workspace stays valid when moved and reruns elsewhere produce identical
// bytes. Falls back to the absolute path when no relative form exists.
inline std::string manifest_relative(const std::filesystem::path& target,
                                     const std::filesystem::path& manifest_path) {
  const std::filesystem::path rel = target.lexically_normal().lexically_relative(
      manifest_path.parent_path().lexically_normal());
  if (rel.empty()) {
    return target.generic_string();
  }
  return rel.generic_string();
}

// Relative paths found inside a manifest resolve against the manifest's own
// directory.
inline std::filesystem::path resolve_manifest_path(const std::filesystem::path& manifest_path,
                                                   const std::string& recorded) {
  const std::filesystem::path p(recorded);
  if (p.empty() || p.is_absolute()) {
    return p;
  }
  return manifest_path.parent_path() / p;
}

}  // namespace posterkit::pipeline
