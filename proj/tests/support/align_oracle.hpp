// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>
#include <vector>

#include "posterkit/ocr/align.hpp"

namespace posterkit::testsupport {

// Independent alignment reference: a memoized top-down search over all edit
// scripts that minimizes (cost, -matches, substitutions) lexicographically.
// Shares no code with the production aligner.
ocr::AlignmentCounts oracle_align(std::string_view gt, std::string_view ocr);

// Fully literal reference: enumerates every edit script without memoization
// and keeps the best. Exponential; only usable for very short strings. Used
// to cross-check oracle_align.
ocr::AlignmentCounts enumerate_align(std::string_view gt, std::string_view ocr);

// All strings over `alphabet` with length 0..max_len, in lexicographic order
// by (length, content).
std::vector<std::string> all_strings(std::string_view alphabet, int max_len);

}  // namespace posterkit::testsupport
