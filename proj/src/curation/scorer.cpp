// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/curation/scorer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace posterkit::curation {

double score_binary(double logit_a, double logit_b, double weight_a, double weight_b) {
  if (std::isnan(logit_a) || std::isnan(logit_b) || std::isnan(weight_a) ||
      std::isnan(weight_b)) {
    throw std::invalid_argument("score_binary: NaN input");
  }
  const double m = std::max(logit_a, logit_b);
  const double ea = std::exp(logit_a - m);
  const double eb = std::exp(logit_b - m);
  const double z = ea + eb;
  return (ea / z) * weight_a + (eb / z) * weight_b;
}

bool binary_accept(double score, double threshold) {
  return score >= threshold;
}

bool hps_keep(double score, double threshold) {
  return !(score < threshold);
}

}  // namespace posterkit::curation
