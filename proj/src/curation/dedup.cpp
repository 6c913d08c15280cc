// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/curation/dedup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "posterkit/curation/phash.hpp"

namespace posterkit::curation {

std::vector<std::string> exact_duplicate_ids(std::span<const ContentHashItem> items) {
  std::map<std::string, std::string> survivor_by_hash;
  for (const ContentHashItem& item : items) {
    auto [it, inserted] = survivor_by_hash.try_emplace(item.content_hash, item.id);
    if (!inserted && item.id < it->second) {
      it->second = item.id;
    }
  }
  std::vector<std::string> rejected;
  for (const ContentHashItem& item : items) {
    if (survivor_by_hash.at(item.content_hash) != item.id) {
      rejected.push_back(item.id);
    }
  }
  std::sort(rejected.begin(), rejected.end());
  return rejected;
}

std::vector<std::string> near_duplicate_ids(std::span<const PhashItem> items, int threshold) {
  if (threshold < 0 || threshold > 64) {
    throw std::invalid_argument("near_duplicate_ids: threshold must be in [0, 64]");
  }
  std::vector<const PhashItem*> ordered;
  ordered.reserve(items.size());
  for (const PhashItem& item : items) {
    ordered.push_back(&item);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const PhashItem* a, const PhashItem* b) { return a->id < b->id; });
  std::vector<std::uint64_t> kept_hashes;
  std::vector<std::string> rejected;
  for (const PhashItem* item : ordered) {
    const bool duplicate =
        std::any_of(kept_hashes.begin(), kept_hashes.end(), [&](std::uint64_t kept) {
          return hamming_distance(kept, item->phash) <= threshold;
        });
    if (duplicate) {
      rejected.push_back(item->id);
    } else {
      kept_hashes.push_back(item->phash);
    }
  }
  return rejected;
}

}  // namespace posterkit::curation
