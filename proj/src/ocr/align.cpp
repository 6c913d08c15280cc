// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/ocr/align.hpp"

#include <tuple>

#include "posterkit/core/utf8.hpp"

namespace posterkit::ocr {
namespace {

// Per-cell objective, compared lexicographically: minimal edit cost, then
// maximal matches (stored negated), then minimal substitutions. Each edit
// step adds a constant vector, so lexicographic order is preserved along
// paths and the usual dynamic program stays optimal.
struct Objective {
  std::int32_t cost;
  std::int32_t neg_correct;
  std::int32_t substitutions;

  auto key() const { return std::tie(cost, neg_correct, substitutions); }
  bool operator<(const Objective& other) const { return key() < other.key(); }
};

}  // namespace

AlignmentCounts align_chars(const std::vector<char32_t>& gt, const std::vector<char32_t>& ocr) {
  const std::size_t n = gt.size();
  const std::size_t m = ocr.size();
  std::vector<Objective> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    prev[j] = {static_cast<std::int32_t>(j), 0, 0};
  }
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = {static_cast<std::int32_t>(i), 0, 0};
    for (std::size_t j = 1; j <= m; ++j) {
      Objective best;
      if (gt[i - 1] == ocr[j - 1]) {
        best = {prev[j - 1].cost, prev[j - 1].neg_correct - 1, prev[j - 1].substitutions};
      } else {
        best = {prev[j - 1].cost + 1, prev[j - 1].neg_correct,
                prev[j - 1].substitutions + 1};
      }
      const Objective del{prev[j].cost + 1, prev[j].neg_correct, prev[j].substitutions};
      if (del < best) {
        best = del;
      }
      const Objective ins{cur[j - 1].cost + 1, cur[j - 1].neg_correct, cur[j - 1].substitutions};
      if (ins < best) {
        best = ins;
      }
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  const Objective& final = prev[m];
  AlignmentCounts counts;
  counts.correct = -final.neg_correct;
  counts.substitutions = final.substitutions;
  counts.deletions = static_cast<std::int64_t>(n) - counts.correct - counts.substitutions;
  counts.insertions = static_cast<std::int64_t>(m) - counts.correct - counts.substitutions;
  return counts;
}

AlignmentCounts align_chars(std::string_view gt_normalized, std::string_view ocr_normalized) {
  return align_chars(utf8_decode(gt_normalized), utf8_decode(ocr_normalized));
}

}  // namespace posterkit::ocr
