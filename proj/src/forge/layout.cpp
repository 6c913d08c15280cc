// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/forge/layout.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/utf8.hpp"
#include "posterkit/forge/glyphs.hpp"

namespace posterkit::forge {
namespace {

int ceil_px(double units, double unit_px) {
  return std::max(1, static_cast<int>(std::ceil(units * unit_px)));
}

std::vector<std::string> split_words(const std::string& content) {
  std::vector<std::string> words;
  std::istringstream in(content);
  std::string word;
  while (in >> word) {
    words.push_back(word);
  }
  return words;
}

std::vector<std::string> wrap_horizontal(const std::string& content,
                                         const FontStyle& style,
                                         double limit_units) {
  if (limit_units <= 0.0 ||
      line_width_units(content, style) <= limit_units) {
    return {content};
  }
  std::vector<std::string> lines;
  std::string current;
  for (const std::string& word : split_words(content)) {
    if (current.empty()) {
      current = word;
      continue;
    }
    const std::string candidate = current + " " + word;
    if (line_width_units(candidate, style) <= limit_units) {
      current = candidate;
    } else {
      lines.push_back(current);
      current = word;
    }
  }
  if (!current.empty()) {
    lines.push_back(current);
  }
  return lines;
}

}  // namespace

PixelRect cell_bounds(GridCell cell, int canvas_width, int canvas_height) {
  const auto lo = [](int k, int extent) { return k * extent / 3; };
  const auto hi = [](int k, int extent) {
    return k == 2 ? extent : ((k + 1) * extent + 2) / 3;
  };
  return {lo(cell.col, canvas_width), lo(cell.row, canvas_height),
          hi(cell.col, canvas_width), hi(cell.row, canvas_height)};
}

double line_width_units(const std::string& line, const FontStyle& style) {
  double units = 0.0;
  for (char32_t cp : utf8_decode(line)) {
    const Glyph* glyph = find_glyph(cp);
    if (!glyph) {
      throw ConfigError("layout: no glyph for codepoint in '" + line + "'");
    }
    units += glyph->advance;
  }
  return units * style.width_scale;
}

std::optional<InstanceGeometry> measure_instance(const TextInstanceSpec& spec,
                                                 const FontStyle& style,
                                                 int font_size_px,
                                                 double wrap_width_px,
                                                 int max_lines) {
  const double unit_px = font_size_px / static_cast<double>(kGlyphUnitsPerLine);
  InstanceGeometry geom;
  switch (spec.orientation) {
    case Orientation::Horizontal:
      geom.lines = wrap_horizontal(spec.content, style, wrap_width_px / unit_px);
      if (static_cast<int>(geom.lines.size()) > max_lines) {
        return std::nullopt;
      }
      break;
    case Orientation::VerticalRotated:
      geom.lines = {spec.content};
      break;
    case Orientation::VerticalStacked:
      for (char32_t cp : utf8_decode(spec.content)) {
        geom.lines.push_back(utf8_encode({cp}));
      }
      break;
  }

  double width_units = 0.0;
  for (const std::string& line : geom.lines) {
    width_units = std::max(width_units, line_width_units(line, style));
  }
  width_units += slant_margin_units(style) + 2.0 * kSideBearingUnits;
  const double height_units =
      (static_cast<double>(geom.lines.size()) - 1) * kLineAdvanceUnits +
      kGlyphUnitsPerLine;
  geom.text_w_px = ceil_px(width_units, unit_px);
  geom.text_h_px = ceil_px(height_units, unit_px);

  if (spec.orientation == Orientation::VerticalRotated) {
    geom.box_w_px = geom.text_h_px;
    geom.box_h_px = geom.text_w_px;
  } else if (spec.rotation_deg != 0.0) {
    const double theta = spec.rotation_deg * M_PI / 180.0;
    const double c = std::abs(std::cos(theta));
    const double s = std::abs(std::sin(theta));
    geom.box_w_px = static_cast<int>(
        std::ceil(geom.text_w_px * c + geom.text_h_px * s));
    geom.box_h_px = static_cast<int>(
        std::ceil(geom.text_w_px * s + geom.text_h_px * c));
  } else {
    geom.box_w_px = geom.text_w_px;
    geom.box_h_px = geom.text_h_px;
  }
  return geom;
}

std::vector<PlacedInstance> plan_layout(std::span<const TextInstanceSpec> specs,
                                        const FontLibrary& fonts, Rng& rng,
                                        const GenerationConfig& config) {
  if (specs.empty() || specs.size() > 3) {
    throw ConfigError("layout: between one and three instances expected");
  }
  if (config.canvas_width < 256 || config.canvas_height < 256) {
    throw ConfigError("layout: canvas must be at least 256x256");
  }

  std::vector<PlacedInstance> placed;
  for (const TextInstanceSpec& spec : specs) {
    if (spec.content.empty()) {
      throw ConfigError("layout: empty instance content");
    }
    if (spec.rotation_deg != 0.0 &&
        spec.orientation != Orientation::Horizontal) {
      throw ConfigError("layout: rotation applies to horizontal text only");
    }
    const FontInfo* font = fonts.find(spec.font_id);
    if (!font) {
      throw ConfigError("layout: unknown font '" + spec.font_id + "'");
    }

    int size = spec.font_size_px;
    GridCell cell = spec.cell;
    bool done = false;
    for (int attempt = 1;
         attempt <= config.max_placement_attempts && !done; ++attempt) {
      if (attempt >= 3) {
        size = std::max(
            8, static_cast<int>(std::lround(size * config.retry_font_scale)));
      }
      const PixelRect region =
          cell_bounds(cell, config.canvas_width, config.canvas_height);
      const double wrap_px = config.wrap_width_fraction * region.width();
      const auto geom = measure_instance(spec, font->style, size, wrap_px,
                                         config.max_wrap_lines);
      if (geom && geom->box_w_px <= region.width() &&
          geom->box_h_px <= region.height()) {
        int x = region.x0;
        if (spec.alignment == Alignment::Center) {
          x = region.x0 + (region.width() - geom->box_w_px) / 2;
        } else if (spec.alignment == Alignment::Right) {
          x = region.x1 - geom->box_w_px;
        }
        const int slack = region.height() - geom->box_h_px;
        const int y = region.y0 + static_cast<int>(rng.uniform_int(
                                      static_cast<std::uint64_t>(slack) + 1));
        const PixelRect box{x, y, x + geom->box_w_px, y + geom->box_h_px};
        const bool collides = std::any_of(
            placed.begin(), placed.end(), [&](const PlacedInstance& other) {
              return rects_overlap(box, other.box, config.collision_padding_px);
            });
        if (!collides) {
          PlacedInstance out;
          out.spec = spec;
          out.spec.cell = cell;
          out.box = box;
          out.font_size_px = size;
          out.lines = geom->lines;
          placed.push_back(std::move(out));
          done = true;
        }
      }
      if (!done && attempt < config.max_placement_attempts) {
        const int current = cell.row * 3 + cell.col;
        int pick = static_cast<int>(rng.uniform_int(8));
        if (pick >= current) {
          ++pick;
        }
        cell = {pick / 3, pick % 3};
      }
    }
  }
  return placed;
}

}  // namespace posterkit::forge
