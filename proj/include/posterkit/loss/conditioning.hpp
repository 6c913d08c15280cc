// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace posterkit::loss {

enum class SegmentKind { Prompt, Reflection, Image };

const char* segment_name(SegmentKind kind);

// One conditioning segment: tokens are columns of an embed_dim x length matrix.
struct Segment {
  SegmentKind kind;
  Eigen::MatrixXd tokens;
};

// The concatenated conditioning input [prompt; reflection; image] with
// per-token positions 0..len-1 and the segment layout preserved.
struct ConditioningSequence {
  Eigen::MatrixXd tokens;  // embed_dim x total_length
  Eigen::Index prompt_length = 0;
  Eigen::Index reflection_length = 0;
  Eigen::Index image_length = 0;
  std::vector<Eigen::Index> positions;

  Eigen::Index length() const { return prompt_length + reflection_length + image_length; }

  // Offsets where the reflection and image segments begin.
  std::array<Eigen::Index, 2> boundaries() const {
    return {prompt_length, prompt_length + reflection_length};
  }

  SegmentKind segment_at(Eigen::Index position) const;
};

// Concatenates the three segments in the fixed order [prompt; reflection;
// image]. Segments may be empty (zero columns); all non-empty segments must
// share the embedding dimension.
ConditioningSequence assemble_conditioning(const Eigen::MatrixXd& prompt_tokens,
                                           const Eigen::MatrixXd& reflection_tokens,
                                           const Eigen::MatrixXd& image_tokens);

// Tagged-segment variant. Rejects any segment order other than
// [Prompt, Reflection, Image], making the order contract explicit.
ConditioningSequence assemble_conditioning(std::span<const Segment> segments);

}  // namespace posterkit::loss
