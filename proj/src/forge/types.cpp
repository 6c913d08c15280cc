// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/forge/types.hpp"

namespace posterkit::forge {

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::Horizontal:
      return "horizontal";
    case Orientation::VerticalRotated:
      return "vertical_rotated";
    case Orientation::VerticalStacked:
      return "vertical_stacked";
  }
  return "horizontal";
}

const char* alignment_name(Alignment a) {
  switch (a) {
    case Alignment::Left:
      return "left";
    case Alignment::Center:
      return "center";
    case Alignment::Right:
      return "right";
  }
  return "left";
}

const char* font_class_name(FontClass c) {
  return c == FontClass::Classic ? "classic" : "stylized";
}

bool rects_overlap(const PixelRect& a, const PixelRect& b, int padding) {
  return a.x0 < b.x1 + padding && b.x0 < a.x1 + padding &&
         a.y0 < b.y1 + padding && b.y0 < a.y1 + padding;
}

int palette_index_by_name(const std::string& name) {
  for (std::size_t i = 0; i < kPalette.size(); ++i) {
    if (name == kPalette[i].name) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

}  // namespace posterkit::forge
