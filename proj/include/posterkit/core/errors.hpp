// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace posterkit {

// Fatal misconfiguration: bad config values, missing assets, unusable inputs.
// Stages fail fast on these before writing any output.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the response parsers. `fragment()` carries the offending piece of
// the input so rejection logs can point at it.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::string fragment = {})
      : std::runtime_error(what), fragment_(std::move(fragment)) {}

  const std::string& fragment() const noexcept { return fragment_; }

 private:
  std::string fragment_;
};

}  // namespace posterkit
