// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace posterkit::curation {

struct ContentHashItem {
  std::string id;
  std::string content_hash;  // hex digest of the file bytes
};

struct PhashItem {
  std::string id;
  std::uint64_t phash = 0;
};

// Ids to drop so that each group of identical content hashes keeps exactly
// its lexicographically smallest id. Returned sorted ascending.
std::vector<std::string> exact_duplicate_ids(std::span<const ContentHashItem> items);

// Greedy near-duplicate sweep in ascending id order: an item is dropped when
// its Hamming distance to any earlier kept item is <= threshold. Returned
// sorted ascending. Input order does not matter.
std::vector<std::string> near_duplicate_ids(std::span<const PhashItem> items, int threshold);

}  // namespace posterkit::curation
