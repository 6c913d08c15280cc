// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace posterkit::forge {

// Word lists feeding the phrase grammar. Words are stored lowercase; casing
// is applied later per instance.
struct Vocabulary {
  std::vector<std::string> adjectives;
  std::vector<std::string> nouns;
  std::vector<std::string> verbs;

  // Compiled-in default lists.
  static Vocabulary builtin();

  // Reads adjectives.txt, nouns.txt and verbs.txt from `dir`, one word per
  // line. Blank lines are skipped. Throws IoError when a file is missing.
  static Vocabulary load(const std::filesystem::path& dir);

  // Throws ConfigError when a list is empty or a word uses a codepoint the
  // builtin glyph set cannot draw.
  void validate() const;
};

}  // namespace posterkit::forge
