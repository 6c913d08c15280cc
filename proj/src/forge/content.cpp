// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/forge/content.hpp"

#include <array>
#include <cctype>

#include "posterkit/core/errors.hpp"

namespace posterkit::forge {
namespace {

constexpr char kAlphanumeric[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

enum class Slot { Adjective, Noun, Verb, The };

struct PhraseTemplate {
  std::array<Slot, 3> slots;
  int slot_count;
};

// Phrase shapes and their draw weights. Mostly adjective-noun pairs with a
// sprinkling of longer forms.
constexpr PhraseTemplate kTemplates[] = {
    {{Slot::Noun, Slot::Noun, Slot::Noun}, 1},
    {{Slot::Adjective, Slot::Noun, Slot::Noun}, 2},
    {{Slot::Noun, Slot::Noun, Slot::Noun}, 2},
    {{Slot::Verb, Slot::The, Slot::Noun}, 3},
    {{Slot::Adjective, Slot::Adjective, Slot::Noun}, 3},
    {{Slot::The, Slot::Adjective, Slot::Noun}, 3},
};
constexpr double kTemplateWeights[] = {0.25, 0.40, 0.10, 0.10, 0.05, 0.10};

enum class Casing { Title, Upper, Lower, Sentence };
constexpr double kCasingWeights[] = {0.40, 0.25, 0.20, 0.15};

constexpr const char* kSuffixes[] = {"", "!", "?", "."};
constexpr double kSuffixWeights[] = {0.70, 0.15, 0.05, 0.10};

const std::string& pick(const std::vector<std::string>& words, Rng& rng) {
  if (words.empty()) {
    throw ConfigError("text content: vocabulary list is empty");
  }
  return words[rng.uniform_int(words.size())];
}

std::string apply_casing(const std::string& phrase, Casing casing) {
  std::string out = phrase;
  switch (casing) {
    case Casing::Lower:
      break;
    case Casing::Upper:
      for (char& c : out) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      }
      break;
    case Casing::Sentence:
      out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
      break;
    case Casing::Title:
      bool at_word_start = true;
      for (char& c : out) {
        if (c == ' ') {
          at_word_start = true;
        } else if (at_word_start) {
          c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
          at_word_start = false;
        }
      }
      break;
  }
  return out;
}

}  // namespace

std::string generate_text_content(Rng& rng, const GenerationConfig& config,
                                  const Vocabulary& vocab) {
  if (rng.bernoulli(config.alphanumeric_fraction)) {
    const int length = rng.range_int(3, 12);
    std::string out;
    out.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
      out.push_back(kAlphanumeric[rng.uniform_int(62)]);
    }
    return out;
  }

  const PhraseTemplate& tpl = kTemplates[rng.pick_weighted(kTemplateWeights)];
  std::string phrase;
  for (int i = 0; i < tpl.slot_count; ++i) {
    if (i > 0) {
      phrase.push_back(' ');
    }
    switch (tpl.slots[static_cast<std::size_t>(i)]) {
      case Slot::Adjective:
        phrase += pick(vocab.adjectives, rng);
        break;
      case Slot::Noun:
        phrase += pick(vocab.nouns, rng);
        break;
      case Slot::Verb:
        phrase += pick(vocab.verbs, rng);
        break;
      case Slot::The:
        phrase += "the";
        break;
    }
  }
  phrase = apply_casing(phrase, static_cast<Casing>(rng.pick_weighted(kCasingWeights)));
  phrase += kSuffixes[rng.pick_weighted(kSuffixWeights)];
  return phrase;
}

}  // namespace posterkit::forge
