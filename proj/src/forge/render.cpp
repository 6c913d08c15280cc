// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/forge/render.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/utf8.hpp"
#include "posterkit/forge/glyphs.hpp"
#include "posterkit/forge/layout.hpp"

namespace posterkit::forge {
namespace {

ImageU8 crop_to_canvas(const ImageU8& src, int width, int height) {
  if (src.width < width || src.height < height) {
    throw ConfigError("render: background smaller than canvas");
  }
  if (src.channels != 1 && src.channels != 3) {
    throw ConfigError("render: background must be gray or RGB");
  }
  ImageU8 out(width, height, 3);
  const int x_off = (src.width - width) / 2;
  const int y_off = (src.height - height) / 2;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const std::uint8_t* in = src.pixel(x + x_off, y + y_off);
      std::uint8_t* px = out.pixel(x, y);
      if (src.channels == 1) {
        px[0] = px[1] = px[2] = in[0];
      } else {
        px[0] = in[0];
        px[1] = in[1];
        px[2] = in[2];
      }
    }
  }
  return out;
}

// Maps design-unit coordinates into canvas pixels: scale, center the text
// rectangle at the box center, then rotate (clockwise in screen coords).
struct Transform {
  double unit_px = 1.0;
  double text_w_px = 0.0;
  double text_h_px = 0.0;
  double center_x = 0.0;
  double center_y = 0.0;
  double cos_t = 1.0;
  double sin_t = 0.0;

  void map(double xu, double yu, double& px, double& py) const {
    const double x = xu * unit_px - text_w_px / 2.0;
    const double y = yu * unit_px - text_h_px / 2.0;
    px = center_x + x * cos_t - y * sin_t;
    py = center_y + x * sin_t + y * cos_t;
  }
};

double dist2_to_segment(double px, double py, double ax, double ay, double bx,
                        double by) {
  const double dx = bx - ax;
  const double dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = std::clamp(((px - ax) * dx + (py - ay) * dy) / len2, 0.0, 1.0);
  }
  const double ex = ax + t * dx - px;
  const double ey = ay + t * dy - py;
  return ex * ex + ey * ey;
}

class Painter {
 public:
  Painter(ImageU8& img, const PixelRect& clip,
          const std::array<std::uint8_t, 3>& rgb)
      : img_(img), rgb_(rgb) {
    x0_ = std::max(clip.x0, 0);
    y0_ = std::max(clip.y0, 0);
    x1_ = std::min(clip.x1, img.width);
    y1_ = std::min(clip.y1, img.height);
  }

  void segment(double ax, double ay, double bx, double by, double radius) {
    const int px0 = std::max(
        x0_, static_cast<int>(std::floor(std::min(ax, bx) - radius)));
    const int py0 = std::max(
        y0_, static_cast<int>(std::floor(std::min(ay, by) - radius)));
    const int px1 = std::min(
        x1_, static_cast<int>(std::ceil(std::max(ax, bx) + radius)) + 1);
    const int py1 = std::min(
        y1_, static_cast<int>(std::ceil(std::max(ay, by) + radius)) + 1);
    const double r2 = radius * radius;
    for (int y = py0; y < py1; ++y) {
      for (int x = px0; x < px1; ++x) {
        const double cx = x + 0.5;
        const double cy = y + 0.5;
        if (dist2_to_segment(cx, cy, ax, ay, bx, by) <= r2) {
          std::uint8_t* px = img_.pixel(x, y);
          px[0] = rgb_[0];
          px[1] = rgb_[1];
          px[2] = rgb_[2];
        }
      }
    }
  }

 private:
  ImageU8& img_;
  std::array<std::uint8_t, 3> rgb_;
  int x0_, y0_, x1_, y1_;
};

void paint_pass(ImageU8& img, const PlacedInstance& placed,
                const FontStyle& style, const Transform& tf, double radius_px,
                const std::array<std::uint8_t, 3>& rgb) {
  Painter painter(img, placed.box, rgb);

  std::vector<double> raw_widths;
  double max_raw = 0.0;
  for (const std::string& line : placed.lines) {
    raw_widths.push_back(line_width_units(line, style));
    max_raw = std::max(max_raw, raw_widths.back());
  }

  for (std::size_t k = 0; k < placed.lines.size(); ++k) {
    double align_off = 0.0;
    if (placed.spec.alignment == Alignment::Center) {
      align_off = (max_raw - raw_widths[k]) / 2.0;
    } else if (placed.spec.alignment == Alignment::Right) {
      align_off = max_raw - raw_widths[k];
    }
    double pen = kSideBearingUnits + slant_offset_units(style) + align_off;
    const double line_y = static_cast<double>(k) * kLineAdvanceUnits;

    for (char32_t cp : utf8_decode(placed.lines[k])) {
      const Glyph* glyph = find_glyph(cp);
      if (!glyph) {
        throw ConfigError("render: no glyph for instance content");
      }
      const auto map_point = [&](const GlyphPoint& p, double& x, double& y) {
        const double xu = pen + p.x * style.width_scale +
                          style.slant * (kBaselineUnits - p.y);
        tf.map(xu, line_y + p.y, x, y);
      };
      for (const GlyphPolyline& stroke : glyph->strokes) {
        if (stroke.empty()) {
          continue;
        }
        double ax, ay;
        map_point(stroke[0], ax, ay);
        if (stroke.size() == 1) {
          painter.segment(ax, ay, ax, ay, radius_px);  // dot
          continue;
        }
        for (std::size_t i = 1; i < stroke.size(); ++i) {
          double bx, by;
          map_point(stroke[i], bx, by);
          painter.segment(ax, ay, bx, by, radius_px);
          ax = bx;
          ay = by;
        }
      }
      pen += glyph->advance * style.width_scale;
    }
  }
}

void draw_instance(ImageU8& img, const PlacedInstance& placed,
                   const FontStyle& style) {
  const double unit_px =
      placed.font_size_px / static_cast<double>(kGlyphUnitsPerLine);

  double max_raw = 0.0;
  for (const std::string& line : placed.lines) {
    max_raw = std::max(max_raw, line_width_units(line, style));
  }
  const double width_units =
      max_raw + slant_margin_units(style) + 2.0 * kSideBearingUnits;
  const double height_units =
      (static_cast<double>(placed.lines.size()) - 1) * kLineAdvanceUnits +
      kGlyphUnitsPerLine;

  Transform tf;
  tf.unit_px = unit_px;
  tf.text_w_px = width_units * unit_px;
  tf.text_h_px = height_units * unit_px;
  tf.center_x = (placed.box.x0 + placed.box.x1) / 2.0;
  tf.center_y = (placed.box.y0 + placed.box.y1) / 2.0;

  double theta_deg = 0.0;
  if (placed.spec.orientation == Orientation::VerticalRotated) {
    theta_deg = 90.0;
  } else if (placed.spec.orientation == Orientation::Horizontal) {
    theta_deg = placed.spec.rotation_deg;
  }
  const double theta = theta_deg * M_PI / 180.0;
  tf.cos_t = std::cos(theta);
  tf.sin_t = std::sin(theta);

  // Stroke radius in design units, capped so strokes stay inside the line
  // band (glyph y spans [1, 11] of the 12-unit line).
  const double base_units = std::min(0.55 * style.weight, 0.95);
  if (style.double_stroke) {
    const double outer_units = std::min(base_units * 1.4, 0.95);
    paint_pass(img, placed, style, tf, outer_units * unit_px, placed.spec.rgb);
    const std::array<std::uint8_t, 3> core = {
        static_cast<std::uint8_t>(placed.spec.rgb[0] / 4),
        static_cast<std::uint8_t>(placed.spec.rgb[1] / 4),
        static_cast<std::uint8_t>(placed.spec.rgb[2] / 4)};
    paint_pass(img, placed, style, tf, outer_units * 0.45 * unit_px, core);
  } else {
    paint_pass(img, placed, style, tf, base_units * unit_px, placed.spec.rgb);
  }
}

}  // namespace

ImageU8 render_sample(const ImageU8& background,
                      std::span<const PlacedInstance> placements,
                      const FontLibrary& fonts,
                      const GenerationConfig& config) {
  ImageU8 canvas =
      crop_to_canvas(background, config.canvas_width, config.canvas_height);
  for (const PlacedInstance& placed : placements) {
    if (placed.box.x0 < 0 || placed.box.y0 < 0 ||
        placed.box.x1 > canvas.width || placed.box.y1 > canvas.height ||
        placed.box.width() <= 0 || placed.box.height() <= 0) {
      throw ConfigError("render: instance box outside canvas");
    }
    const FontInfo* font = fonts.find(placed.spec.font_id);
    if (!font) {
      throw ConfigError("render: unknown font '" + placed.spec.font_id + "'");
    }
    draw_instance(canvas, placed, font->style);
  }
  return canvas;
}

}  // namespace posterkit::forge
