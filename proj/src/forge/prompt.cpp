// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/forge/prompt.hpp"

#include <string_view>

#include "posterkit/core/errors.hpp"

namespace posterkit::forge {
namespace {

constexpr const char* kPositionNames[9] = {
    "top left",    "top center",    "top right",
    "middle left", "center",        "middle right",
    "bottom left", "bottom center", "bottom right",
};

constexpr const char* kOrientationPhrases[3] = {
    "oriented horizontally",
    "rotated vertically",
    "stacked vertically",
};

std::string clause_for(const PlacedInstance& inst) {
  if (inst.spec.color_index < 0 ||
      inst.spec.color_index >= static_cast<int>(kPalette.size())) {
    throw ConfigError("prompt: color index out of range");
  }
  if (inst.spec.cell.row < 0 || inst.spec.cell.row > 2 ||
      inst.spec.cell.col < 0 || inst.spec.cell.col > 2) {
    throw ConfigError("prompt: grid cell out of range");
  }
  std::string out = "The text \"";
  out += inst.spec.content;
  out += "\" appears in the ";
  out += position_name(inst.spec.cell);
  out += ", ";
  out += orientation_phrase(inst.spec.orientation);
  out += ", in ";
  out += kPalette[static_cast<std::size_t>(inst.spec.color_index)].name;
  out += " color";
  if (inst.spec.mention_font) {
    out += ", in a ";
    out += font_class_name(inst.spec.font_class);
    out += " font style";
  }
  out += ".";
  return out;
}

// Cursor over the prompt with exact-match helpers.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("prompt: " + what + " at offset " +
                     std::to_string(pos));
  }

  bool at_end() const { return pos == text.size(); }

  void expect(std::string_view literal) {
    if (text.substr(pos, literal.size()) != literal) {
      fail("expected '" + std::string(literal) + "'");
    }
    pos += literal.size();
  }

  bool try_consume(std::string_view literal) {
    if (text.substr(pos, literal.size()) == literal) {
      pos += literal.size();
      return true;
    }
    return false;
  }

  // Consumes up to (not including) the next occurrence of `stop`.
  std::string until(std::string_view stop) {
    const std::size_t found = text.find(stop, pos);
    if (found == std::string_view::npos) {
      fail("expected '" + std::string(stop) + "' later in the clause");
    }
    std::string out(text.substr(pos, found - pos));
    pos = found;
    return out;
  }
};

PromptClause parse_clause(Cursor& cur) {
  PromptClause clause;
  cur.expect("The text \"");
  clause.content = cur.until("\"");
  cur.expect("\" appears in the ");

  const std::string position = cur.until(", ");
  int cell_index = -1;
  for (int i = 0; i < 9; ++i) {
    if (position == kPositionNames[i]) {
      cell_index = i;
      break;
    }
  }
  if (cell_index < 0) {
    cur.fail("unknown position '" + position + "'");
  }
  clause.cell = {cell_index / 3, cell_index % 3};
  cur.expect(", ");

  const std::string orientation = cur.until(", ");
  int orientation_index = -1;
  for (int i = 0; i < 3; ++i) {
    if (orientation == kOrientationPhrases[i]) {
      orientation_index = i;
      break;
    }
  }
  if (orientation_index < 0) {
    cur.fail("unknown orientation '" + orientation + "'");
  }
  clause.orientation = static_cast<Orientation>(orientation_index);
  cur.expect(", in ");

  clause.color = cur.until(" color");
  if (palette_index_by_name(clause.color) < 0) {
    cur.fail("unknown color '" + clause.color + "'");
  }
  cur.expect(" color");

  if (cur.try_consume(", in a classic font style")) {
    clause.font_class = FontClass::Classic;
  } else if (cur.try_consume(", in a stylized font style")) {
    clause.font_class = FontClass::Stylized;
  }
  cur.expect(".");
  return clause;
}

}  // namespace

const char* position_name(GridCell cell) {
  return kPositionNames[cell.row * 3 + cell.col];
}

const char* orientation_phrase(Orientation o) {
  return kOrientationPhrases[static_cast<int>(o)];
}

std::string synthesize_prompt(std::span<const PlacedInstance> instances) {
  if (instances.empty()) {
    return kNoTextPrompt;
  }
  if (instances.size() == 1) {
    return clause_for(instances[0]);
  }
  std::string out;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (i > 0) {
      out += " ";
    }
    out += std::to_string(i + 1);
    out += ". ";
    out += clause_for(instances[i]);
  }
  return out;
}

ParsedPrompt parse_prompt(const std::string& prompt) {
  ParsedPrompt parsed;
  if (prompt == kNoTextPrompt) {
    parsed.no_text = true;
    return parsed;
  }
  Cursor cur{prompt};
  if (cur.try_consume("1. ")) {
    parsed.clauses.push_back(parse_clause(cur));
    int index = 2;
    while (!cur.at_end()) {
      cur.expect(" " + std::to_string(index) + ". ");
      parsed.clauses.push_back(parse_clause(cur));
      ++index;
    }
    if (parsed.clauses.size() < 2) {
      cur.fail("numbered prompt with a single clause");
    }
  } else {
    parsed.clauses.push_back(parse_clause(cur));
    if (!cur.at_end()) {
      cur.fail("trailing text after clause");
    }
  }
  return parsed;
}

}  // namespace posterkit::forge
