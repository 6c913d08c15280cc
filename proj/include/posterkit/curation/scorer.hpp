// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace posterkit::curation {

inline constexpr double kBinaryThreshold = 0.98;
inline constexpr double kHpsThreshold = 0.25;

// Expected score of a two-option judge: softmax over the two logits, then a
// weighted sum of the option weights. With the default weights (0 for the
// first option, 1 for the second) this is the probability assigned to the
// second option, sigma(logit_b - logit_a). Computed with max subtraction so
// large logits cannot overflow. NaN logits or weights are rejected.
double score_binary(double logit_a, double logit_b, double weight_a = 0.0,
                    double weight_b = 1.0);

// Acceptance is inclusive: a score exactly at the threshold passes.
bool binary_accept(double score, double threshold = kBinaryThreshold);

// Rejection is strict: only scores below the threshold are dropped, so a
// score exactly at the threshold is kept.
bool hps_keep(double score, double threshold = kHpsThreshold);

}  // namespace posterkit::curation
