// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace posterkit {

// Interleaved 8-bit raster, row major. `channels` is 1 (gray) or 3 (RGB).
struct ImageU8 {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> data;

  ImageU8() = default;
  ImageU8(int w, int h, int c, std::uint8_t fill = 0)
      : width(w),
        height(h),
        channels(c),
        data(static_cast<std::size_t>(w) * h * c, fill) {}

  std::uint8_t* pixel(int x, int y) {
    return data.data() + (static_cast<std::size_t>(y) * width + x) * channels;
  }
  const std::uint8_t* pixel(int x, int y) const {
    return data.data() + (static_cast<std::size_t>(y) * width + x) * channels;
  }
  bool contains(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
  std::size_t size_bytes() const { return data.size(); }
};

// Rec. 601 luma, one float per pixel in [0, 255]. Shape is (height, width).
Eigen::ArrayXXf to_gray(const ImageU8& image);

// Box-filter (area) resample of a grayscale plane to the requested shape.
// Each output pixel averages the source rectangle it covers, so the result is
// independent of how the source dimensions factor.
Eigen::ArrayXXf resize_area(const Eigen::ArrayXXf& src, int out_width, int out_height);

}  // namespace posterkit
