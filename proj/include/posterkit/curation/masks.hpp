// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "posterkit/core/image.hpp"
#include "posterkit/core/jsonl.hpp"

namespace posterkit::curation {

inline constexpr double kMajorFractionThreshold = 0.05;
inline constexpr double kMajorWeight = 0.6;
inline constexpr double kMinorWeight = 0.2;

enum class SizeClass { Major, Minor };

// One detected text region. The box is [ymin, xmin, ymax, xmax] on the
// 0..1000 normalized canvas.
struct TextRegionMask {
  std::array<int, 4> box_2d{};
  SizeClass size_class = SizeClass::Minor;
  double area_fraction = 0.0;
};

// Parses the strict region-detector reply: {"text_regions": [[y0,x0,y1,x1],
// ...]} with integer coordinates in [0, 1000], min < max per axis, and no
// other keys. An empty list is a valid "no text" answer.
std::vector<std::array<int, 4>> parse_text_regions(std::string_view response);

// Major when the box covers at least `major_fraction_threshold` of the
// normalized canvas (boundary inclusive), Minor otherwise.
TextRegionMask classify_mask(const std::array<int, 4>& box_2d,
                             double major_fraction_threshold = kMajorFractionThreshold);

// Half-open pixel rectangle [x0,x1) x [y0,y1).
struct PixelBox {
  int x0 = 0;
  int y0 = 0;
  int x1 = 0;
  int y1 = 0;
};

// Scales a normalized box onto a canvas: floor for min edges, ceil for max
// edges, so the pixel box never undershoots the region it covers.
PixelBox scale_box(const std::array<int, 4>& box_2d, int width, int height);

// Per-pixel weights over the canvas: 1.0 outside every mask, 0.6 under only
// Major masks, 0.2 under any Minor mask (the smaller weight wins overlaps).
// Shape is (height, width).
Eigen::ArrayXXf rasterize_weight_map(std::span<const TextRegionMask> masks, int width,
                                     int height);

// Persistable gray image with the fixed value mapping 0.2 -> 51, 0.6 -> 153,
// 1.0 -> 255, plus the sidecar document stating that mapping.
ImageU8 weight_map_to_image(const Eigen::ArrayXXf& grid);
Eigen::ArrayXXf weight_map_from_image(const ImageU8& image);
Json weight_map_sidecar();

}  // namespace posterkit::curation
