// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace posterkit::ocr {

// Canonicalizes text before character alignment:
//   1. lowercase (ASCII plus the Latin-1 letter range),
//   2. strip the punctuation set  . , ; : ! ? ' " - ( ) [ ] { } ` and the
//      horizontal ellipsis,
//   3. collapse whitespace runs to single spaces and trim the ends.
// Operates on Unicode scalar values, not bytes.
std::string normalize_text(std::string_view raw);

// The same pipeline, returned as codepoints ready for alignment.
std::vector<char32_t> normalize_codepoints(std::string_view raw);

}  // namespace posterkit::ocr
