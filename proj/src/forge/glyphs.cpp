// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/forge/glyphs.hpp"

#include <cstdlib>
#include <map>

#include "posterkit/core/utf8.hpp"

namespace posterkit::forge {
namespace {

struct GlyphDef {
  char32_t cp;
  int advance;
  // Polylines separated by ';', points by ' ', coordinates "x,y" on the
  // design grid. An empty string means no strokes (space).
  const char* strokes;
};

constexpr GlyphDef kGlyphDefs[] = {
    {U'A', 7, "0,9 3,1 6,9;1,6 5,6"},
    {U'B', 7, "0,1 0,9;0,1 4,1 5,2 5,4 4,5 0,5;4,5 5,6 5,8 4,9 0,9"},
    {U'C', 7, "6,2 5,1 2,1 0,3 0,7 2,9 5,9 6,8"},
    {U'D', 7, "0,1 0,9;0,1 3,1 6,3 6,7 3,9 0,9"},
    {U'E', 7, "6,1 0,1 0,9 6,9;0,5 4,5"},
    {U'F', 7, "6,1 0,1 0,9;0,5 4,5"},
    {U'G', 7, "6,2 5,1 2,1 0,3 0,7 2,9 5,9 6,8 6,5 3,5"},
    {U'H', 7, "0,1 0,9;6,1 6,9;0,5 6,5"},
    {U'I', 7, "1,1 5,1;3,1 3,9;1,9 5,9"},
    {U'J', 7, "6,1 6,7 5,9 2,9 0,7"},
    {U'K', 7, "0,1 0,9;6,1 0,5 6,9"},
    {U'L', 7, "0,1 0,9 6,9"},
    {U'M', 7, "0,9 0,1 3,6 6,1 6,9"},
    {U'N', 7, "0,9 0,1 6,9 6,1"},
    {U'O', 7, "2,1 4,1 6,3 6,7 4,9 2,9 0,7 0,3 2,1"},
    {U'P', 7, "0,9 0,1 4,1 6,2 6,4 4,5 0,5"},
    {U'Q', 7, "2,1 4,1 6,3 6,7 4,9 2,9 0,7 0,3 2,1;4,7 6,10"},
    {U'R', 7, "0,9 0,1 4,1 6,2 6,4 4,5 0,5;3,5 6,9"},
    {U'S', 7, "6,2 4,1 2,1 0,2 0,4 2,5 4,5 6,6 6,8 4,9 2,9 0,8"},
    {U'T', 7, "0,1 6,1;3,1 3,9"},
    {U'U', 7, "0,1 0,7 2,9 4,9 6,7 6,1"},
    {U'V', 7, "0,1 3,9 6,1"},
    {U'W', 7, "0,1 1,9 3,4 5,9 6,1"},
    {U'X', 7, "0,1 6,9;6,1 0,9"},
    {U'Y', 7, "0,1 3,5 6,1;3,5 3,9"},
    {U'Z', 7, "0,1 6,1 0,9 6,9"},
    {U'a', 6, "5,4 5,9;5,5 4,4 1,4 0,5 0,8 1,9 4,9 5,8"},
    {U'b', 6, "0,1 0,9;0,5 2,4 4,4 5,5 5,8 4,9 2,9 0,8"},
    {U'c', 6, "5,5 4,4 1,4 0,5 0,8 1,9 4,9 5,8"},
    {U'd', 6, "5,1 5,9;5,5 3,4 1,4 0,5 0,8 1,9 3,9 5,8"},
    {U'e', 6, "0,6 5,6 5,5 4,4 1,4 0,5 0,8 1,9 4,9 5,8"},
    {U'f', 5, "4,1 2,1 1,2 1,9;0,4 3,4"},
    {U'g', 6, "5,4 5,10 4,11 1,11 0,10;5,5 3,4 1,4 0,5 0,8 1,9 3,9 5,8"},
    {U'h', 6, "0,1 0,9;0,5 2,4 4,4 5,5 5,9"},
    {U'i', 3, "1,2 1,2;1,4 1,9"},
    {U'j', 4, "2,2 2,2;2,4 2,10 1,11 0,10"},
    {U'k', 5, "0,1 0,9;4,4 0,6 4,9"},
    {U'l', 3, "1,1 1,8 2,9"},
    {U'm', 7, "0,4 0,9;0,6 2,4 3,6 3,9;3,6 5,4 6,6 6,9"},
    {U'n', 6, "0,4 0,9;0,5 2,4 4,4 5,5 5,9"},
    {U'o', 6, "1,4 4,4 5,5 5,8 4,9 1,9 0,8 0,5 1,4"},
    {U'p', 6, "0,4 0,11;0,5 2,4 4,4 5,5 5,8 4,9 2,9 0,8"},
    {U'q', 6, "5,4 5,11;5,5 3,4 1,4 0,5 0,8 1,9 3,9 5,8"},
    {U'r', 5, "0,4 0,9;0,6 1,4 3,4 4,5"},
    {U's', 6, "5,5 4,4 1,4 0,5 1,6 4,7 5,8 4,9 1,9 0,8"},
    {U't', 5, "1,1 1,8 2,9 4,9;0,4 3,4"},
    {U'u', 6, "0,4 0,8 1,9 4,9 5,8;5,4 5,9"},
    {U'v', 6, "0,4 2,9 5,4"},
    {U'w', 7, "0,4 1,9 3,6 5,9 6,4"},
    {U'x', 6, "0,4 5,9;5,4 0,9"},
    {U'y', 6, "0,4 2,8;5,4 1,11"},
    {U'z', 6, "0,4 5,4 0,9 5,9"},
    {U'0', 6, "1,1 4,1 5,2 5,8 4,9 1,9 0,8 0,2 1,1"},
    {U'1', 6, "1,3 3,1 3,9;1,9 5,9"},
    {U'2', 6, "0,3 0,2 1,1 4,1 5,2 5,4 0,9 5,9"},
    {U'3', 6, "0,2 1,1 4,1 5,2 5,4 3,5;3,5 5,6 5,8 4,9 1,9 0,8"},
    {U'4', 6, "4,9 4,1 0,6 5,6"},
    {U'5', 6, "5,1 0,1 0,5 3,5 5,6 5,8 3,9 1,9 0,8"},
    {U'6', 6, "4,1 1,4 0,6 0,8 1,9 4,9 5,8 5,6 4,5 1,5 0,6"},
    {U'7', 6, "0,1 5,1 2,9"},
    {U'8', 6, "1,1 4,1 5,2 5,4 4,5 1,5 0,4 0,2 1,1;1,5 0,6 0,8 1,9 4,9 5,8 5,6 4,5"},
    {U'9', 6, "1,9 4,6 5,4;5,4 5,2 4,1 1,1 0,2 0,4 1,5 4,5 5,4"},
    {U' ', 4, ""},
    {U'.', 3, "1,9 1,9"},
    {U',', 3, "1,9 0,11"},
    {U'!', 3, "1,1 1,6;1,9 1,9"},
    {U'?', 5, "0,2 1,1 3,1 4,2 4,4 2,5 2,6;2,9 2,9"},
    {U'\'', 3, "1,1 1,3"},
    {U'-', 5, "0,5 4,5"},
    {U':', 3, "1,5 1,5;1,9 1,9"},
};

std::vector<GlyphPolyline> parse_strokes(const char* text) {
  std::vector<GlyphPolyline> strokes;
  if (*text == '\0') {
    return strokes;
  }
  GlyphPolyline current;
  const char* p = text;
  while (true) {
    char* end = nullptr;
    const double x = std::strtod(p, &end);
    p = end + 1;  // skip ','
    const double y = std::strtod(p, &end);
    p = end;
    current.push_back({x, y});
    if (*p == ' ') {
      ++p;
      continue;
    }
    strokes.push_back(std::move(current));
    current.clear();
    if (*p == ';') {
      ++p;
      continue;
    }
    break;
  }
  return strokes;
}

const std::map<char32_t, Glyph>& glyph_table() {
  static const std::map<char32_t, Glyph> table = [] {
    std::map<char32_t, Glyph> t;
    for (const GlyphDef& def : kGlyphDefs) {
      Glyph g;
      g.codepoint = def.cp;
      g.advance = def.advance;
      g.strokes = parse_strokes(def.strokes);
      t.emplace(def.cp, std::move(g));
    }
    return t;
  }();
  return table;
}

}  // namespace

const Glyph* find_glyph(char32_t cp) {
  const auto& table = glyph_table();
  const auto it = table.find(cp);
  return it == table.end() ? nullptr : &it->second;
}

bool glyphs_cover(std::string_view content) {
  for (char32_t cp : utf8_decode(content)) {
    if (!find_glyph(cp)) {
      return false;
    }
  }
  return true;
}

std::vector<char32_t> builtin_glyph_codepoints() {
  std::vector<char32_t> out;
  for (const auto& [cp, glyph] : glyph_table()) {
    out.push_back(cp);
  }
  return out;
}

}  // namespace posterkit::forge
