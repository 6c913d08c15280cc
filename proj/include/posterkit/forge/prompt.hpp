// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posterkit/forge/types.hpp"

namespace posterkit::forge {

// Emitted when a sample ends up with no placed text.
inline constexpr const char* kNoTextPrompt =
    "The image contains no rendered text.";

// Human position name of a grid cell, e.g. "bottom right". The middle cell
// is plain "center".
const char* position_name(GridCell cell);

// "oriented horizontally", "rotated vertically" or "stacked vertically".
const char* orientation_phrase(Orientation o);

// One clause per instance stating content, position, orientation and color,
// plus the font class for instances whose spec asks to mention it. Multiple
// clauses are numbered "1. ... 2. ..."; a single clause stands alone; no
// instances gives kNoTextPrompt.
std::string synthesize_prompt(std::span<const PlacedInstance> instances);

// What parse_prompt recovers for one clause.
struct PromptClause {
  std::string content;
  GridCell cell;
  Orientation orientation = Orientation::Horizontal;
  std::string color;                    // palette category name
  std::optional<FontClass> font_class;  // set when the clause mentions it

  bool operator==(const PromptClause&) const = default;
};

struct ParsedPrompt {
  bool no_text = false;
  std::vector<PromptClause> clauses;
};

// Exact inverse of synthesize_prompt. Throws ParseError on any deviation
// from the emitted grammar.
ParsedPrompt parse_prompt(const std::string& prompt);

}  // namespace posterkit::forge
