// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <set>

#include "../support/parser_fixtures.hpp"

namespace fs = std::filesystem;
using namespace posterkit::testsupport;

TEST_CASE("annotated response fixtures parse or reject exactly as recorded") {
  const fs::path dir = fs::path(POSTERKIT_TEST_DATA_DIR) / "parsers";
  const auto fixtures = load_parser_fixtures(dir);
  REQUIRE(fixtures.size() == 30);

  std::set<std::string> parsers;
  for (const ParserFixture& fixture : fixtures) {
    parsers.insert(fixture.parser);
    INFO(fixture.file);
    CHECK(check_parser_fixture(dir, fixture) == "");
  }
  // All four response formats are represented.
  CHECK(parsers ==
        std::set<std::string>{"text_regions", "final_decision", "best_image", "feedback"});
}
