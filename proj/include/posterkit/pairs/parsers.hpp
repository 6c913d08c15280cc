// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace posterkit::pairs {

enum class AlignmentVerdict { Pass, Fail };

// Parses {"final_decision": "1"} / {"final_decision": "0"}. Any other value,
// key set, or non-JSON text raises ParseError.
AlignmentVerdict parse_verdict(std::string_view raw);

// Parses {"best_image": "1".."6"} to a 0-based index, {"best_image": "none"}
// to nullopt. Anything else raises ParseError.
std::optional<int> parse_best_of_six(std::string_view raw);

// The two feedback dimensions collected for a reflection pair.
struct Feedback {
  std::string content;  // "Poster Content Suggestions"
  std::string style;    // "Aesthetic style optimization suggestions"
};

// Parses the strict two-key feedback reply. Both keys must be present with
// non-empty string values and no extras.
Feedback parse_feedback(std::string_view raw);

}  // namespace posterkit::pairs
