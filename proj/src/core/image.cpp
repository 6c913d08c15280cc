// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/core/image.hpp"

#include <algorithm>
#include <stdexcept>

namespace posterkit {

Eigen::ArrayXXf to_gray(const ImageU8& image) {
  Eigen::ArrayXXf out(image.height, image.width);
  if (image.channels == 1) {
    for (int y = 0; y < image.height; ++y) {
      for (int x = 0; x < image.width; ++x) {
        out(y, x) = static_cast<float>(*image.pixel(x, y));
      }
    }
    return out;
  }
  if (image.channels != 3) {
    throw std::invalid_argument("to_gray expects 1 or 3 channels");
  }
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      const std::uint8_t* p = image.pixel(x, y);
      out(y, x) = 0.299f * p[0] + 0.587f * p[1] + 0.114f * p[2];
    }
  }
  return out;
}

Eigen::ArrayXXf resize_area(const Eigen::ArrayXXf& src, int out_width, int out_height) {
  const int src_h = static_cast<int>(src.rows());
  const int src_w = static_cast<int>(src.cols());
  if (src_h <= 0 || src_w <= 0 || out_width <= 0 || out_height <= 0) {
    throw std::invalid_argument("resize_area requires positive dimensions");
  }
  Eigen::ArrayXXf out(out_height, out_width);
  const double sx = static_cast<double>(src_w) / out_width;
  const double sy = static_cast<double>(src_h) / out_height;
  for (int oy = 0; oy < out_height; ++oy) {
    const double y0 = oy * sy;
    const double y1 = (oy + 1) * sy;
    const int iy0 = static_cast<int>(y0);
    const int iy1 = std::min(src_h, static_cast<int>(std::ceil(y1)));
    for (int ox = 0; ox < out_width; ++ox) {
      const double x0 = ox * sx;
      const double x1 = (ox + 1) * sx;
      const int ix0 = static_cast<int>(x0);
      const int ix1 = std::min(src_w, static_cast<int>(std::ceil(x1)));
      double acc = 0.0;
      double area = 0.0;
      for (int iy = iy0; iy < iy1; ++iy) {
        const double hy = std::min(y1, iy + 1.0) - std::max(y0, static_cast<double>(iy));
        for (int ix = ix0; ix < ix1; ++ix) {
          const double wx = std::min(x1, ix + 1.0) - std::max(x0, static_cast<double>(ix));
          acc += static_cast<double>(src(iy, ix)) * hy * wx;
          area += hy * wx;
        }
      }
      out(oy, ox) = static_cast<float>(acc / area);
    }
  }
  return out;
}

}  // namespace posterkit
