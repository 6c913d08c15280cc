// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/curation/phash.hpp"

namespace posterkit::curation {

std::uint64_t dhash_gray(const Eigen::ArrayXXf& gray) {
  const Eigen::ArrayXXf grid = resize_area(gray, 9, 8);
  std::uint64_t hash = 0;
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      if (grid(y, x) > grid(y, x + 1)) {
        hash |= std::uint64_t{1} << (y * 8 + x);
      }
    }
  }
  return hash;
}

std::uint64_t dhash(const ImageU8& image) {
  return dhash_gray(to_gray(image));
}

}  // namespace posterkit::curation
