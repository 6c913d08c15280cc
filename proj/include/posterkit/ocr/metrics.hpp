// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>

#include "posterkit/ocr/align.hpp"

namespace posterkit::ocr {

struct OcrMetrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
};

// accuracy = C/T, precision = C/(C+I+S), recall = C/(C+D+S),
// f = 2PR/(P+R). All four are 1.0 when every count is zero (two empty
// strings match vacuously); a zero denominator otherwise yields 0.0.
OcrMetrics compute_metrics(const AlignmentCounts& counts);

// Unweighted per-sample mean of each metric. Throws on an empty corpus.
OcrMetrics aggregate_corpus(std::span<const OcrMetrics> samples);

// Renders a ratio in [0, 1] as a percentage string like "87.50%".
std::string format_percent(double value);

}  // namespace posterkit::ocr
