// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posterkit/pairs/parsers.hpp"

namespace posterkit::pairs {

inline constexpr double kRewardGapThreshold = 0.025;
inline constexpr int kReflectionSetSize = 6;

// Stable rejection and drop reason strings.
namespace reject {
inline constexpr const char* kDegenerateSet = "degenerate_set";
inline constexpr const char* kGapTooSmall = "gap_too_small";
inline constexpr const char* kMissingVerdict = "missing_verdict";
inline constexpr const char* kAlignmentFail = "alignment_fail";
inline constexpr const char* kMissingFeedback = "missing_feedback";
inline constexpr const char* kFeedbackParseError = "feedback_parse_error";
}  // namespace reject

struct Candidate {
  std::string image_ref;
  double reward = 0.0;
};

struct CandidateSet {
  std::string prompt_id;
  std::vector<Candidate> candidates;
};

struct Extremes {
  std::size_t winner = 0;
  std::size_t loser = 0;
};

// Best-of-n collapse: winner = argmax reward, loser = argmin reward, ties
// broken toward the smallest index. Returns nullopt when every reward is
// equal (no pair can be formed). Throws on fewer than two rewards or any
// non-finite reward.
std::optional<Extremes> select_extremes(std::span<const double> rewards);

struct PreferencePair {
  std::string prompt_id;
  std::string winner;
  std::string loser;
  double reward_gap = 0.0;
  AlignmentVerdict alignment_verdict = AlignmentVerdict::Fail;
};

// Either an emitted pair or a rejection reason; never both.
struct PairOutcome {
  std::optional<PreferencePair> pair;
  std::string reject_reason;

  bool emitted() const { return pair.has_value(); }
};

// Applies the gates in a fixed order: degenerate set, then the strict reward
// gap (> 0.025), then verdict presence, then the verdict itself. The verdict
// judges the winner only, so it is consulted last and is not needed for sets
// that already failed an earlier gate.
PairOutcome build_preference_pair(const CandidateSet& set,
                                  std::optional<AlignmentVerdict> verdict);

struct ReflectionPair {
  std::string source;
  std::string target;
  std::string feedback_content;
  std::string feedback_style;
};

struct DroppedPair {
  std::string source;
  std::string reason;
};

struct ReflectionSet {
  std::string prompt_id;
  std::array<std::string, kReflectionSetSize> candidates;
  std::optional<int> best_index;
  std::vector<ReflectionPair> pairs;
  std::vector<DroppedPair> dropped;
  bool discarded = false;
};

// Supplies the raw feedback reply for the candidate at `source_index`, or
// nullopt when none was collected.
using FeedbackLookup = std::function<std::optional<std::string>(int source_index)>;

// Builds the 5 source->best pairs for one set of 6 candidates. best_index
// nullopt discards the whole set (0 pairs). A pair whose feedback is missing
// or unparseable is dropped individually and recorded; other pairs are
// unaffected.
ReflectionSet build_reflection_pairs(const std::string& prompt_id,
                                     std::span<const std::string> candidates,
                                     std::optional<int> best_index,
                                     const FeedbackLookup& feedback_for);

}  // namespace posterkit::pairs
