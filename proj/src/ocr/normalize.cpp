// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/ocr/normalize.hpp"

#include "posterkit/core/utf8.hpp"

namespace posterkit::ocr {
namespace {

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') {
    return cp + 0x20;
  }
  // Latin-1 uppercase letters, skipping the multiplication sign.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) {
    return cp + 0x20;
  }
  return cp;
}

bool is_stripped_punct(char32_t cp) {
  switch (cp) {
    case U'.':
    case U',':
    case U';':
    case U':':
    case U'!':
    case U'?':
    case U'\'':
    case U'"':
    case U'-':
    case U'(':
    case U')':
    case U'[':
    case U']':
    case U'{':
    case U'}':
    case U'`':
    case 0x2026:  // horizontal ellipsis
      return true;
    default:
      return false;
  }
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case 0xA0:  // no-break space
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<char32_t> normalize_codepoints(std::string_view raw) {
  std::vector<char32_t> out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char32_t cp : utf8_decode(raw)) {
    cp = to_lower(cp);
    if (is_stripped_punct(cp)) {
      continue;
    }
    if (is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(cp);
  }
  return out;
}

std::string normalize_text(std::string_view raw) {
  return utf8_encode(normalize_codepoints(raw));
}

}  // namespace posterkit::ocr
