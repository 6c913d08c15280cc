// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posterkit/curation/masks.hpp"

namespace posterkit::curation {

enum class RecordStatus { Pending, Rejected, Accepted };

// Stable rejection reason strings used in manifests and reports.
namespace reject {
inline constexpr const char* kDuplicateExact = "duplicate_exact";
inline constexpr const char* kDuplicateNear = "duplicate_near";
inline constexpr const char* kLowBinaryScore = "low_binary_score";
inline constexpr const char* kMissingLogits = "missing_logits";
inline constexpr const char* kLowHps = "low_hps";
inline constexpr const char* kMissingScore = "missing_score";
inline constexpr const char* kIo = "io";
}  // namespace reject

// One poster moving through the curation stages.
struct PosterRecord {
  std::string id;
  std::string image_path;
  std::string content_hash;  // MD5 hex of the image bytes
  std::uint64_t phash = 0;
  std::optional<double> binary_score;
  std::optional<double> hps_score;
  std::string caption;
  std::vector<TextRegionMask> masks;
  RecordStatus status = RecordStatus::Pending;
  std::string reject_reason;

  void reject(const char* reason) {
    status = RecordStatus::Rejected;
    reject_reason = reason;
  }
  bool live() const { return status != RecordStatus::Rejected; }
};

}  // namespace posterkit::curation
