// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/loss/conditioning.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace posterkit::loss {

const char* segment_name(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::Prompt:
      return "prompt";
    case SegmentKind::Reflection:
      return "reflection";
    case SegmentKind::Image:
      return "image";
  }
  return "unknown";
}

SegmentKind ConditioningSequence::segment_at(Eigen::Index position) const {
  if (position < 0 || position >= length()) {
    throw std::out_of_range("segment_at: position " + std::to_string(position) +
                            " outside sequence of length " + std::to_string(length()));
  }
  if (position < prompt_length) {
    return SegmentKind::Prompt;
  }
  if (position < prompt_length + reflection_length) {
    return SegmentKind::Reflection;
  }
  return SegmentKind::Image;
}

ConditioningSequence assemble_conditioning(const Eigen::MatrixXd& prompt_tokens,
                                           const Eigen::MatrixXd& reflection_tokens,
                                           const Eigen::MatrixXd& image_tokens) {
  const Eigen::MatrixXd* parts[] = {&prompt_tokens, &reflection_tokens, &image_tokens};
  Eigen::Index dim = -1;
  for (const Eigen::MatrixXd* part : parts) {
    if (part->cols() == 0) {
      continue;
    }
    if (dim < 0) {
      dim = part->rows();
    } else if (part->rows() != dim) {
      throw std::invalid_argument("assemble_conditioning: embedding dimension mismatch (" +
                                  std::to_string(dim) + " vs " + std::to_string(part->rows()) +
                                  ")");
    }
  }
  if (dim < 0) {
    dim = 0;
  }

  ConditioningSequence seq;
  seq.prompt_length = prompt_tokens.cols();
  seq.reflection_length = reflection_tokens.cols();
  seq.image_length = image_tokens.cols();
  seq.tokens.resize(dim, seq.length());
  Eigen::Index offset = 0;
  for (const Eigen::MatrixXd* part : parts) {
    if (part->cols() > 0) {
      seq.tokens.middleCols(offset, part->cols()) = *part;
    }
    offset += part->cols();
  }
  seq.positions.resize(static_cast<std::size_t>(seq.length()));
  std::iota(seq.positions.begin(), seq.positions.end(), Eigen::Index{0});
  return seq;
}

ConditioningSequence assemble_conditioning(std::span<const Segment> segments) {
  constexpr SegmentKind expected[] = {SegmentKind::Prompt, SegmentKind::Reflection,
                                      SegmentKind::Image};
  if (segments.size() != 3) {
    throw std::invalid_argument("assemble_conditioning: expected exactly 3 segments, got " +
                                std::to_string(segments.size()));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (segments[i].kind != expected[i]) {
      throw std::invalid_argument(std::string("assemble_conditioning: segment ") +
                                  std::to_string(i) + " must be " + segment_name(expected[i]) +
                                  ", got " + segment_name(segments[i].kind));
    }
  }
  return assemble_conditioning(segments[0].tokens, segments[1].tokens, segments[2].tokens);
}

}  // namespace posterkit::loss
