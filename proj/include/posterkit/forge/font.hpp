// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "posterkit/core/rng.hpp"
#include "posterkit/forge/types.hpp"

namespace posterkit::forge {

// Rendering parameters applied on top of the shared glyph outlines.
struct FontStyle {
  double slant = 0.0;        // x shear per design unit above the baseline
  double weight = 1.0;       // stroke thickness multiplier
  double width_scale = 1.0;  // horizontal scale for advances and outlines
  bool double_stroke = false;  // draw a thin inner echo of every stroke
};

struct FontInfo {
  std::string id;
  FontClass font_class = FontClass::Classic;
  std::string coverage;  // "full" or "caps-only"
  FontStyle style;

  // True when every codepoint has a glyph and the coverage restriction
  // allows the content (caps-only fonts reject lowercase letters).
  bool covers(std::string_view content) const;
};

class FontLibrary {
 public:
  FontLibrary() = default;
  explicit FontLibrary(std::vector<FontInfo> fonts)
      : fonts_(std::move(fonts)) {}

  // The compiled-in set of nine fonts.
  static FontLibrary builtin();

  // Reads every *.json font description in `dir` (sorted by filename).
  static FontLibrary load(const std::filesystem::path& dir);

  const std::vector<FontInfo>& fonts() const { return fonts_; }
  const FontInfo* find(const std::string& id) const;
  std::vector<const FontInfo*> by_class(FontClass c) const;

  // Uniformly picks a font of the class that can draw `content`. Returns
  // nullptr when no font qualifies. Consumes exactly one draw from `rng`
  // whenever at least one candidate exists.
  const FontInfo* select(FontClass c, std::string_view content,
                         Rng& rng) const;

 private:
  std::vector<FontInfo> fonts_;
};

// Serialized form of one font description, used by the asset files.
FontInfo parse_font_json(const std::string& text);
std::string font_to_json(const FontInfo& font);

}  // namespace posterkit::forge
