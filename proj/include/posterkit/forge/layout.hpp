// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posterkit/core/rng.hpp"
#include "posterkit/forge/config.hpp"
#include "posterkit/forge/font.hpp"
#include "posterkit/forge/types.hpp"

namespace posterkit::forge {

// Pixel bounds of one cell of the 3x3 canvas partition. Cells are computed
// with floor/ceil so they cover the canvas; neighbours may share one pixel
// column or row.
PixelRect cell_bounds(GridCell cell, int canvas_width, int canvas_height);

// Width of a single line in design units, including the font's width scale.
// Throws ConfigError when a codepoint has no glyph.
double line_width_units(const std::string& line, const FontStyle& style);

// Horizontal padding (design units) on each side of a line so stroke
// thickness never spills past the text rectangle.
inline constexpr double kSideBearingUnits = 1.0;

// Slanted strokes lean by slant * (baseline - y). Glyph y spans [1, 11], so
// shifts range from -2*slant (descenders) to +8*slant (letter tops). The
// margin widens the text rectangle to hold the lean; the offset shifts
// strokes right so descenders stay inside. Measurement and painting must
// agree on both, hence they live here.
inline double slant_margin_units(const FontStyle& style) {
  return style.slant * 11.0;
}
inline double slant_offset_units(const FontStyle& style) {
  return style.slant * 2.0;
}

// The measured shape of one instance's text at a given font size.
struct InstanceGeometry {
  std::vector<std::string> lines;
  // Unrotated text rectangle in pixels (slant margin included).
  int text_w_px = 0;
  int text_h_px = 0;
  // Final box the layout places: equals the text rectangle for plain
  // horizontal text, the axis-aligned cover of the rotated rectangle when
  // rotation applies, and the swapped rectangle for vertically rotated text.
  int box_w_px = 0;
  int box_h_px = 0;
};

// Splits and measures `spec.content` for the given font size. Horizontal
// text wraps greedily at spaces when wider than `wrap_width_px`; a single
// word longer than the limit stays on its own line and the caller's fit
// check decides. Returns nullopt when wrapping would need more than
// `max_lines` lines.
std::optional<InstanceGeometry> measure_instance(const TextInstanceSpec& spec,
                                                 const FontStyle& style,
                                                 int font_size_px,
                                                 double wrap_width_px,
                                                 int max_lines);

// Places each spec on the canvas: the box must fit inside the instance's
// grid cell and must not overlap previously placed boxes (with padding).
// Failed attempts move to a different random cell; from the third attempt
// the font also shrinks by the retry scale. Instances that exhaust
// max_placement_attempts are dropped.
std::vector<PlacedInstance> plan_layout(std::span<const TextInstanceSpec> specs,
                                        const FontLibrary& fonts, Rng& rng,
                                        const GenerationConfig& config);

}  // namespace posterkit::forge
