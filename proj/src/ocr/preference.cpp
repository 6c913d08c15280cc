// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/ocr/preference.hpp"

#include <array>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/jsonl.hpp"

namespace posterkit::ocr {
namespace {

PreferenceChoice parse_choice(const Json& value, const char* key, std::string_view raw) {
  if (!value.is_string()) {
    throw ParseError(std::string("preference response: ") + key + " must be a string",
                     std::string(raw));
  }
  const std::string& s = value.get_ref<const std::string&>();
  if (s == "L") {
    return PreferenceChoice::Left;
  }
  if (s == "R") {
    return PreferenceChoice::Right;
  }
  if (s == "none") {
    return PreferenceChoice::None;
  }
  throw ParseError(std::string("preference response: ") + key + " must be \"L\", \"R\", or \"none\"",
                   s);
}

std::string parse_explanation(const Json& value, const char* key, std::string_view raw) {
  if (!value.is_string() || value.get_ref<const std::string&>().empty()) {
    throw ParseError(std::string("preference response: ") + key + " must be a non-empty string",
                     std::string(raw));
  }
  return value.get<std::string>();
}

}  // namespace

const char* preference_choice_name(PreferenceChoice choice) {
  switch (choice) {
    case PreferenceChoice::Left:
      return "L";
    case PreferenceChoice::Right:
      return "R";
    case PreferenceChoice::None:
      return "none";
  }
  return "none";
}

PreferenceResponse parse_preference_response(std::string_view raw) {
  const Json obj = parse_json(std::string(raw), "preference response");
  if (!obj.is_object()) {
    throw ParseError("preference response must be a JSON object", std::string(raw));
  }
  static constexpr std::array<const char*, 8> keys = {
      "aesthetic_value",  "aesthetic_value_explanation",
      "prompt_alignment", "prompt_alignment_explanation",
      "text_accuracy",    "text_accuracy_explanation",
      "overall_preference", "overall_preference_explanation"};
  if (obj.size() != keys.size()) {
    throw ParseError("preference response must contain exactly the 8 expected keys",
                     std::string(raw));
  }
  for (const char* key : keys) {
    if (!obj.contains(key)) {
      throw ParseError(std::string("preference response missing key: ") + key,
                       std::string(raw));
    }
  }
  PreferenceResponse r;
  r.aesthetic_value = parse_choice(obj["aesthetic_value"], "aesthetic_value", raw);
  r.prompt_alignment = parse_choice(obj["prompt_alignment"], "prompt_alignment", raw);
  r.text_accuracy = parse_choice(obj["text_accuracy"], "text_accuracy", raw);
  r.overall_preference = parse_choice(obj["overall_preference"], "overall_preference", raw);
  r.aesthetic_value_explanation =
      parse_explanation(obj["aesthetic_value_explanation"], "aesthetic_value_explanation", raw);
  r.prompt_alignment_explanation =
      parse_explanation(obj["prompt_alignment_explanation"], "prompt_alignment_explanation", raw);
  r.text_accuracy_explanation =
      parse_explanation(obj["text_accuracy_explanation"], "text_accuracy_explanation", raw);
  r.overall_preference_explanation = parse_explanation(
      obj["overall_preference_explanation"], "overall_preference_explanation", raw);
  return r;
}

}  // namespace posterkit::ocr
