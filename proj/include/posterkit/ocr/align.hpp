// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace posterkit::ocr {

struct AlignmentCounts {
  std::int64_t correct = 0;
  std::int64_t insertions = 0;
  std::int64_t deletions = 0;
  std::int64_t substitutions = 0;

  std::int64_t total() const { return correct + insertions + deletions + substitutions; }
  std::int64_t gt_length() const { return correct + deletions + substitutions; }
  std::int64_t ocr_length() const { return correct + insertions + substitutions; }

  bool operator==(const AlignmentCounts&) const = default;
};

// Minimum-cost character alignment between normalized ground truth and OCR
// output. Insertions, deletions, and substitutions cost 1; matches cost 0.
// Among minimum-cost alignments, prefers the one with the most matches, then
// the fewest substitutions, so the counts are canonical.
AlignmentCounts align_chars(const std::vector<char32_t>& gt, const std::vector<char32_t>& ocr);

// Convenience overload decoding UTF-8 inputs that are already normalized.
AlignmentCounts align_chars(std::string_view gt_normalized, std::string_view ocr_normalized);

}  // namespace posterkit::ocr
