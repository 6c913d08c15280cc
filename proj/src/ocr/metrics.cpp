// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/ocr/metrics.hpp"

#include <cstdio>
#include <stdexcept>

namespace posterkit::ocr {
namespace {

double ratio(std::int64_t numer, std::int64_t denom) {
  return denom == 0 ? 0.0 : static_cast<double>(numer) / static_cast<double>(denom);
}

}  // namespace

OcrMetrics compute_metrics(const AlignmentCounts& counts) {
  if (counts.correct < 0 || counts.insertions < 0 || counts.deletions < 0 ||
      counts.substitutions < 0) {
    throw std::invalid_argument("compute_metrics: negative counts");
  }
  if (counts.total() == 0) {
    return {1.0, 1.0, 1.0, 1.0};
  }
  OcrMetrics m;
  m.accuracy = ratio(counts.correct, counts.total());
  m.precision = ratio(counts.correct, counts.ocr_length());
  m.recall = ratio(counts.correct, counts.gt_length());
  const double pr = m.precision + m.recall;
  m.f_score = pr == 0.0 ? 0.0 : 2.0 * m.precision * m.recall / pr;
  return m;
}

OcrMetrics aggregate_corpus(std::span<const OcrMetrics> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("aggregate_corpus: empty corpus");
  }
  OcrMetrics sum;
  for (const OcrMetrics& s : samples) {
    sum.accuracy += s.accuracy;
    sum.precision += s.precision;
    sum.recall += s.recall;
    sum.f_score += s.f_score;
  }
  const double n = static_cast<double>(samples.size());
  return {sum.accuracy / n, sum.precision / n, sum.recall / n, sum.f_score / n};
}

std::string format_percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", value * 100.0);
  return buf;
}

}  // namespace posterkit::ocr
