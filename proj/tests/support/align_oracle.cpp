// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "align_oracle.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace posterkit::testsupport {
namespace {

// (cost, -correct, substitutions), compared lexicographically.
using Triple = std::array<std::int32_t, 3>;

constexpr Triple kWorst = {INT32_MAX, 0, 0};

Triple plus(Triple t, std::int32_t cost, std::int32_t correct, std::int32_t subs) {
  return {t[0] + cost, t[1] - correct, t[2] + subs};
}

struct Memo {
  std::string_view gt;
  std::string_view ocr;
  std::map<std::pair<std::size_t, std::size_t>, Triple> table;

  Triple best(std::size_t i, std::size_t j) {
    if (i == gt.size() && j == ocr.size()) {
      return {0, 0, 0};
    }
    const auto key = std::make_pair(i, j);
    if (auto it = table.find(key); it != table.end()) {
      return it->second;
    }
    Triple result = kWorst;
    if (i < gt.size() && j < ocr.size()) {
      const bool match = gt[i] == ocr[j];
      const Triple t = plus(best(i + 1, j + 1), match ? 0 : 1, match ? 1 : 0, match ? 0 : 1);
      result = std::min(result, t);
    }
    if (i < gt.size()) {
      result = std::min(result, plus(best(i + 1, j), 1, 0, 0));  // deletion
    }
    if (j < ocr.size()) {
      result = std::min(result, plus(best(i, j + 1), 1, 0, 0));  // insertion
    }
    table.emplace(key, result);
    return result;
  }
};

ocr::AlignmentCounts counts_from(std::string_view gt, std::string_view ocr, Triple t) {
  ocr::AlignmentCounts c;
  c.correct = -t[1];
  c.substitutions = t[2];
  c.deletions = static_cast<std::int64_t>(gt.size()) - c.correct - c.substitutions;
  c.insertions = static_cast<std::int64_t>(ocr.size()) - c.correct - c.substitutions;
  return c;
}

void enumerate(std::string_view gt, std::string_view ocr, std::size_t i, std::size_t j,
               Triple sofar, Triple& best) {
  if (i == gt.size() && j == ocr.size()) {
    best = std::min(best, sofar);
    return;
  }
  if (i < gt.size() && j < ocr.size()) {
    const bool match = gt[i] == ocr[j];
    enumerate(gt, ocr, i + 1, j + 1,
              plus(sofar, match ? 0 : 1, match ? 1 : 0, match ? 0 : 1), best);
  }
  if (i < gt.size()) {
    enumerate(gt, ocr, i + 1, j, plus(sofar, 1, 0, 0), best);
  }
  if (j < ocr.size()) {
    enumerate(gt, ocr, i, j + 1, plus(sofar, 1, 0, 0), best);
  }
}

}  // namespace

ocr::AlignmentCounts oracle_align(std::string_view gt, std::string_view ocr) {
  Memo memo{gt, ocr, {}};
  return counts_from(gt, ocr, memo.best(0, 0));
}

ocr::AlignmentCounts enumerate_align(std::string_view gt, std::string_view ocr) {
  Triple best = kWorst;
  enumerate(gt, ocr, 0, 0, {0, 0, 0}, best);
  return counts_from(gt, ocr, best);
}

std::vector<std::string> all_strings(std::string_view alphabet, int max_len) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : alphabet) {
        out.push_back(out[i] + c);
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace posterkit::testsupport
