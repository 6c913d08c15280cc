// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/curation/masks.hpp"

#include <algorithm>
#include <stdexcept>

#include "posterkit/core/errors.hpp"

namespace posterkit::curation {
namespace {

void validate_box(const std::array<int, 4>& box, std::string_view fragment) {
  const auto [ymin, xmin, ymax, xmax] = box;
  if (ymin < 0 || xmin < 0 || ymax > 1000 || xmax > 1000 || ymin >= ymax || xmin >= xmax) {
    throw ParseError("text region box violates 0 <= min < max <= 1000", std::string(fragment));
  }
}

}  // namespace

std::vector<std::array<int, 4>> parse_text_regions(std::string_view response) {
  const Json doc = parse_json(std::string(response), "text regions response");
  if (!doc.is_object()) {
    throw ParseError("text regions response must be a JSON object", std::string(response));
  }
  if (doc.size() != 1 || !doc.contains("text_regions")) {
    throw ParseError("text regions response must contain exactly the key \"text_regions\"",
                     std::string(response));
  }
  const Json& list = doc["text_regions"];
  if (!list.is_array()) {
    throw ParseError("\"text_regions\" must be an array", list.dump());
  }
  std::vector<std::array<int, 4>> boxes;
  boxes.reserve(list.size());
  for (const Json& entry : list) {
    if (!entry.is_array() || entry.size() != 4) {
      throw ParseError("each text region must be a 4-element array", entry.dump());
    }
    std::array<int, 4> box{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!entry[i].is_number_integer()) {
        throw ParseError("text region coordinates must be integers", entry.dump());
      }
      box[i] = entry[i].get<int>();
    }
    validate_box(box, entry.dump());
    boxes.push_back(box);
  }
  return boxes;
}

TextRegionMask classify_mask(const std::array<int, 4>& box_2d,
                             double major_fraction_threshold) {
  validate_box(box_2d, "classify_mask input");
  TextRegionMask mask;
  mask.box_2d = box_2d;
  const auto [ymin, xmin, ymax, xmax] = box_2d;
  mask.area_fraction =
      static_cast<double>(ymax - ymin) * static_cast<double>(xmax - xmin) / 1e6;
  mask.size_class =
      mask.area_fraction >= major_fraction_threshold ? SizeClass::Major : SizeClass::Minor;
  return mask;
}

PixelBox scale_box(const std::array<int, 4>& box_2d, int width, int height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("scale_box: canvas must be at least 1x1");
  }
  validate_box(box_2d, "scale_box input");
  const auto [ymin, xmin, ymax, xmax] = box_2d;
  PixelBox out;
  out.x0 = xmin * width / 1000;
  out.y0 = ymin * height / 1000;
  out.x1 = (xmax * width + 999) / 1000;
  out.y1 = (ymax * height + 999) / 1000;
  return out;
}

Eigen::ArrayXXf rasterize_weight_map(std::span<const TextRegionMask> masks, int width,
                                     int height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("rasterize_weight_map: canvas must be at least 1x1");
  }
  Eigen::ArrayXXf grid = Eigen::ArrayXXf::Constant(height, width, 1.0f);
  for (const TextRegionMask& mask : masks) {
    const PixelBox box = scale_box(mask.box_2d, width, height);
    const float w =
        mask.size_class == SizeClass::Major ? static_cast<float>(kMajorWeight)
                                            : static_cast<float>(kMinorWeight);
    const int x1 = std::min(box.x1, width);
    const int y1 = std::min(box.y1, height);
    for (int y = box.y0; y < y1; ++y) {
      for (int x = box.x0; x < x1; ++x) {
        grid(y, x) = std::min(grid(y, x), w);
      }
    }
  }
  return grid;
}

namespace {

constexpr float kWeightValues[] = {0.2f, 0.6f, 1.0f};
constexpr std::uint8_t kPixelValues[] = {51, 153, 255};

}  // namespace

ImageU8 weight_map_to_image(const Eigen::ArrayXXf& grid) {
  ImageU8 image(static_cast<int>(grid.cols()), static_cast<int>(grid.rows()), 1);
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      const float v = grid(y, x);
      std::uint8_t pixel = 0;
      bool matched = false;
      for (int k = 0; k < 3; ++k) {
        if (std::abs(v - kWeightValues[k]) < 1e-4f) {
          pixel = kPixelValues[k];
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw std::invalid_argument("weight_map_to_image: value outside {0.2, 0.6, 1.0}");
      }
      *image.pixel(x, y) = pixel;
    }
  }
  return image;
}

Eigen::ArrayXXf weight_map_from_image(const ImageU8& image) {
  if (image.channels != 1) {
    throw std::invalid_argument("weight_map_from_image: expected a single-channel image");
  }
  Eigen::ArrayXXf grid(image.height, image.width);
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      const std::uint8_t p = *image.pixel(x, y);
      bool matched = false;
      for (int k = 0; k < 3; ++k) {
        if (p == kPixelValues[k]) {
          grid(y, x) = kWeightValues[k];
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw std::invalid_argument("weight_map_from_image: pixel outside {51, 153, 255}");
      }
    }
  }
  return grid;
}

Json weight_map_sidecar() {
  Json mapping;
  mapping["0.2"] = 51;
  mapping["0.6"] = 153;
  mapping["1.0"] = 255;
  Json doc;
  doc["schema"] = "posterkit.weight-map";
  doc["version"] = 1;
  doc["encoding"] = "png-gray8";
  doc["value_to_pixel"] = mapping;
  return doc;
}

}  // namespace posterkit::curation
