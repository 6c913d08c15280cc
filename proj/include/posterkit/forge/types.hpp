// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace posterkit::forge {

enum class Orientation { Horizontal, VerticalRotated, VerticalStacked };
enum class Alignment { Left, Center, Right };
enum class FontClass { Classic, Stylized };

const char* orientation_name(Orientation o);
const char* alignment_name(Alignment a);
const char* font_class_name(FontClass c);

// Grid position on the 3x3 canvas partition.
struct GridCell {
  int row = 0;
  int col = 0;
  bool operator==(const GridCell&) const = default;
};

// Half-open pixel rectangle [x0, x1) x [y0, y1).
struct PixelRect {
  int x0 = 0;
  int y0 = 0;
  int x1 = 0;
  int y1 = 0;

  int width() const { return x1 - x0; }
  int height() const { return y1 - y0; }
  bool operator==(const PixelRect&) const = default;
};

bool rects_overlap(const PixelRect& a, const PixelRect& b, int padding);

struct PaletteColor {
  const char* name;
  std::array<int, 3> rgb;
};

// The fixed named color categories text instances draw from.
inline constexpr std::array<PaletteColor, 12> kPalette = {{
    {"black", {20, 20, 20}},
    {"white", {240, 240, 240}},
    {"red", {200, 30, 30}},
    {"orange", {235, 130, 20}},
    {"yellow", {240, 210, 40}},
    {"green", {40, 160, 60}},
    {"cyan", {40, 190, 200}},
    {"blue", {40, 80, 200}},
    {"purple", {120, 50, 180}},
    {"pink", {230, 120, 170}},
    {"brown", {130, 80, 40}},
    {"gray", {128, 128, 128}},
}};

int palette_index_by_name(const std::string& name);  // -1 when unknown

// One fully specified text instance before placement.
struct TextInstanceSpec {
  std::string content;
  std::string font_id;
  FontClass font_class = FontClass::Classic;
  int color_index = 0;
  std::array<std::uint8_t, 3> rgb{};  // jittered render color
  Orientation orientation = Orientation::Horizontal;
  Alignment alignment = Alignment::Left;
  double rotation_deg = 0.0;
  GridCell cell;
  int font_size_px = 48;
  bool mention_font = false;
};

// A placed instance: the spec plus its resolved geometry. `font_size_px`
// reflects any shrink applied during retries; `lines` is the text split into
// rendered lines (wrapping for horizontal text, one character per line when
// stacked).
struct PlacedInstance {
  TextInstanceSpec spec;
  PixelRect box;
  int font_size_px = 0;
  std::vector<std::string> lines;
};

}  // namespace posterkit::forge
