// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>
#include <vector>

namespace posterkit::forge {

// Glyphs are polyline strokes on a fixed design grid: 12 units tall with the
// baseline at y = 9, cap height at y = 1, x-height at y = 4, and descenders
// reaching y = 11. A glyph's advance already includes the inter-glyph gap.
inline constexpr int kGlyphUnitsPerLine = 12;
inline constexpr int kLineAdvanceUnits = 14;
inline constexpr double kBaselineUnits = 9.0;

struct GlyphPoint {
  double x = 0.0;
  double y = 0.0;
};

using GlyphPolyline = std::vector<GlyphPoint>;

struct Glyph {
  char32_t codepoint = 0;
  int advance = 0;
  std::vector<GlyphPolyline> strokes;  // a single-point polyline is a dot
};

// Builtin table lookup; nullptr when the codepoint has no glyph.
const Glyph* find_glyph(char32_t cp);

// True when every codepoint of the UTF-8 content has a glyph.
bool glyphs_cover(std::string_view content);

// Every codepoint in the builtin table, ascending.
std::vector<char32_t> builtin_glyph_codepoints();

}  // namespace posterkit::forge
