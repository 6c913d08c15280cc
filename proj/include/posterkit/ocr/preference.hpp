// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace posterkit::ocr {

// A side-by-side comparison verdict: left better, right better, or no call.
enum class PreferenceChoice { Left, Right, None };

const char* preference_choice_name(PreferenceChoice choice);

// The four judged axes of a pairwise poster comparison plus the judge's
// free-text explanations.
struct PreferenceResponse {
  PreferenceChoice aesthetic_value = PreferenceChoice::None;
  PreferenceChoice prompt_alignment = PreferenceChoice::None;
  PreferenceChoice text_accuracy = PreferenceChoice::None;
  PreferenceChoice overall_preference = PreferenceChoice::None;
  std::string aesthetic_value_explanation;
  std::string prompt_alignment_explanation;
  std::string text_accuracy_explanation;
  std::string overall_preference_explanation;
};

// Parses the strict evaluator reply: a bare JSON object with exactly the
// four choice keys (values "L", "R", or "none") and their *_explanation
// strings. Anything else (extra keys, missing keys, markdown fences, other
// values) raises ParseError.
PreferenceResponse parse_preference_response(std::string_view raw);

}  // namespace posterkit::ocr
