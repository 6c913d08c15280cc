// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/forge/vocabulary.hpp"

#include <sstream>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/fsutil.hpp"
#include "posterkit/forge/glyphs.hpp"

namespace posterkit::forge {
namespace {

const char* const kAdjectives[] = {
    "amber",  "ancient", "bold",    "bright", "calm",    "cosmic",
    "crisp",  "daring",  "electric", "fresh",  "gilded",  "golden",
    "grand",  "hidden",  "little",  "lively", "lunar",   "midnight",
    "modern", "neon",    "quiet",   "rapid",  "royal",   "rustic",
    "silent", "silver",  "summer",  "velvet", "vivid",   "wild",
};

const char* const kNouns[] = {
    "archive", "bakery",   "ballad",  "bazaar",  "breeze",  "canyon",
    "carnival", "cinema",  "circuit", "comet",   "district", "ember",
    "festival", "galaxy",  "garden",  "harbor",  "horizon", "jubilee",
    "lantern",  "market",  "meadow",  "mirage",  "museum",  "night",
    "orchard",  "parade",  "quartet", "relay",   "river",   "salon",
    "season",   "signal",  "sonata",  "studio",  "summit",  "tide",
    "voyage",   "wander",  "wonder",  "workshop",
};

const char* const kVerbs[] = {
    "awaken", "celebrate", "chase",  "discover", "embrace", "explore",
    "follow", "gather",    "ignite", "imagine",  "join",    "protect",
    "savor",  "seek",      "share",  "taste",
};

std::vector<std::string> read_word_file(const std::filesystem::path& path) {
  std::vector<std::string> words;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty()) {
      words.push_back(line);
    }
  }
  return words;
}

void check_list(const std::vector<std::string>& words, const char* label) {
  if (words.empty()) {
    throw ConfigError(std::string("vocabulary: ") + label + " list is empty");
  }
  for (const std::string& word : words) {
    if (!glyphs_cover(word)) {
      throw ConfigError(std::string("vocabulary: ") + label + " word '" +
                        word + "' is not drawable");
    }
  }
}

}  // namespace

Vocabulary Vocabulary::builtin() {
  Vocabulary v;
  v.adjectives.assign(std::begin(kAdjectives), std::end(kAdjectives));
  v.nouns.assign(std::begin(kNouns), std::end(kNouns));
  v.verbs.assign(std::begin(kVerbs), std::end(kVerbs));
  return v;
}

Vocabulary Vocabulary::load(const std::filesystem::path& dir) {
  Vocabulary v;
  v.adjectives = read_word_file(dir / "adjectives.txt");
  v.nouns = read_word_file(dir / "nouns.txt");
  v.verbs = read_word_file(dir / "verbs.txt");
  return v;
}

void Vocabulary::validate() const {
  check_list(adjectives, "adjective");
  check_list(nouns, "noun");
  check_list(verbs, "verb");
}

}  // namespace posterkit::forge
