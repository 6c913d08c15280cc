// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>

#include "posterkit/core/image.hpp"

namespace posterkit::curation {

inline constexpr int kNearDuplicateThreshold = 8;

// 64-bit difference hash: the image is reduced to a 9x8 grayscale grid with
// an area filter, and bit (row*8 + col) records whether the cell is brighter
// than its right neighbor.
std::uint64_t dhash(const ImageU8& image);
std::uint64_t dhash_gray(const Eigen::ArrayXXf& gray);

inline int hamming_distance(std::uint64_t a, std::uint64_t b) {
  return std::popcount(a ^ b);
}

}  // namespace posterkit::curation
