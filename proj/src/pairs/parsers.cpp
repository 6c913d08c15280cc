// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/pairs/parsers.hpp"

#include "posterkit/core/errors.hpp"
#include "posterkit/core/jsonl.hpp"

namespace posterkit::pairs {
namespace {

const Json& single_string_field(const Json& doc, const char* key, std::string_view raw) {
  if (!doc.is_object() || doc.size() != 1 || !doc.contains(key)) {
    throw ParseError(std::string("expected an object with exactly the key \"") + key + "\"",
                     std::string(raw));
  }
  const Json& value = doc[key];
  if (!value.is_string()) {
    throw ParseError(std::string("\"") + key + "\" must be a string", std::string(raw));
  }
  return value;
}

}  // namespace

AlignmentVerdict parse_verdict(std::string_view raw) {
  const Json doc = parse_json(std::string(raw), "verdict response");
  const std::string& v =
      single_string_field(doc, "final_decision", raw).get_ref<const std::string&>();
  if (v == "1") {
    return AlignmentVerdict::Pass;
  }
  if (v == "0") {
    return AlignmentVerdict::Fail;
  }
  throw ParseError("\"final_decision\" must be \"1\" or \"0\"", v);
}

std::optional<int> parse_best_of_six(std::string_view raw) {
  const Json doc = parse_json(std::string(raw), "best-of-six response");
  const std::string& v =
      single_string_field(doc, "best_image", raw).get_ref<const std::string&>();
  if (v == "none") {
    return std::nullopt;
  }
  if (v.size() == 1 && v[0] >= '1' && v[0] <= '6') {
    return v[0] - '1';
  }
  throw ParseError("\"best_image\" must be \"1\"..\"6\" or \"none\"", v);
}

Feedback parse_feedback(std::string_view raw) {
  static constexpr const char* kContentKey = "Poster Content Suggestions";
  static constexpr const char* kStyleKey = "Aesthetic style optimization suggestions";
  const Json doc = parse_json(std::string(raw), "feedback response");
  if (!doc.is_object() || doc.size() != 2 || !doc.contains(kContentKey) ||
      !doc.contains(kStyleKey)) {
    throw ParseError("feedback must contain exactly the two suggestion keys",
                     std::string(raw));
  }
  const Json& content = doc[kContentKey];
  const Json& style = doc[kStyleKey];
  if (!content.is_string() || content.get_ref<const std::string&>().empty() ||
      !style.is_string() || style.get_ref<const std::string&>().empty()) {
    throw ParseError("feedback values must be non-empty strings", std::string(raw));
  }
  return Feedback{content.get<std::string>(), style.get<std::string>()};
}

}  // namespace posterkit::pairs
