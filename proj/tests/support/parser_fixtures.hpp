// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "posterkit/core/jsonl.hpp"

namespace posterkit::testsupport {

// One annotated response fixture: a raw reply file plus the parser it targets
// and the outcome it must produce.
struct ParserFixture {
  std::string file;
  std::string parser;  // text_regions | final_decision | best_image | feedback
  bool expect_ok = false;
  Json value;  // expected parse result when expect_ok
};

// Loads index.jsonl from the fixture directory.
std::vector<ParserFixture> load_parser_fixtures(const std::filesystem::path& dir);

// Runs one fixture through the real parser. Returns an empty string when the
// behavior matches the annotation, otherwise a description of the mismatch.
std::string check_parser_fixture(const std::filesystem::path& dir, const ParserFixture& fixture);

}  // namespace posterkit::testsupport
