// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/pairs/builder.hpp"

#include <cmath>
#include <stdexcept>

#include "posterkit/core/errors.hpp"

namespace posterkit::pairs {

std::optional<Extremes> select_extremes(std::span<const double> rewards) {
  if (rewards.size() < 2) {
    throw std::invalid_argument("select_extremes: need at least two rewards");
  }
  for (double r : rewards) {
    if (!std::isfinite(r)) {
      throw std::invalid_argument("select_extremes: rewards must be finite");
    }
  }
  Extremes ext;
  for (std::size_t i = 1; i < rewards.size(); ++i) {
    if (rewards[i] > rewards[ext.winner]) {
      ext.winner = i;
    }
    if (rewards[i] < rewards[ext.loser]) {
      ext.loser = i;
    }
  }
  if (rewards[ext.winner] == rewards[ext.loser]) {
    return std::nullopt;
  }
  return ext;
}

PairOutcome build_preference_pair(const CandidateSet& set,
                                  std::optional<AlignmentVerdict> verdict) {
  if (set.candidates.size() < 2) {
    throw std::invalid_argument("build_preference_pair: need at least two candidates");
  }
  std::vector<double> rewards;
  rewards.reserve(set.candidates.size());
  for (const Candidate& c : set.candidates) {
    rewards.push_back(c.reward);
  }
  const std::optional<Extremes> ext = select_extremes(rewards);
  if (!ext) {
    return {std::nullopt, reject::kDegenerateSet};
  }
  const double gap = rewards[ext->winner] - rewards[ext->loser];
  if (!(gap > kRewardGapThreshold)) {
    return {std::nullopt, reject::kGapTooSmall};
  }
  if (!verdict) {
    return {std::nullopt, reject::kMissingVerdict};
  }
  if (*verdict != AlignmentVerdict::Pass) {
    return {std::nullopt, reject::kAlignmentFail};
  }
  PreferencePair pair;
  pair.prompt_id = set.prompt_id;
  pair.winner = set.candidates[ext->winner].image_ref;
  pair.loser = set.candidates[ext->loser].image_ref;
  pair.reward_gap = gap;
  pair.alignment_verdict = AlignmentVerdict::Pass;
  return {pair, ""};
}

ReflectionSet build_reflection_pairs(const std::string& prompt_id,
                                     std::span<const std::string> candidates,
                                     std::optional<int> best_index,
                                     const FeedbackLookup& feedback_for) {
  if (candidates.size() != kReflectionSetSize) {
    throw std::invalid_argument("build_reflection_pairs: expected exactly 6 candidates");
  }
  ReflectionSet set;
  set.prompt_id = prompt_id;
  for (int i = 0; i < kReflectionSetSize; ++i) {
    set.candidates[static_cast<std::size_t>(i)] = candidates[static_cast<std::size_t>(i)];
  }
  if (!best_index) {
    set.discarded = true;
    return set;
  }
  if (*best_index < 0 || *best_index >= kReflectionSetSize) {
    throw std::invalid_argument("build_reflection_pairs: best_index out of range");
  }
  set.best_index = best_index;
  const std::string& target = set.candidates[static_cast<std::size_t>(*best_index)];
  for (int i = 0; i < kReflectionSetSize; ++i) {
    if (i == *best_index) {
      continue;
    }
    const std::string& source = set.candidates[static_cast<std::size_t>(i)];
    const std::optional<std::string> raw = feedback_for ? feedback_for(i) : std::nullopt;
    if (!raw) {
      set.dropped.push_back({source, reject::kMissingFeedback});
      continue;
    }
    try {
      Feedback feedback = parse_feedback(*raw);
      set.pairs.push_back(
          {source, target, std::move(feedback.content), std::move(feedback.style)});
    } catch (const ParseError&) {
      set.dropped.push_back({source, reject::kFeedbackParseError});
    }
  }
  return set;
}

}  // namespace posterkit::pairs
