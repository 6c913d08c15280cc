// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <vector>

#include "../support/align_oracle.hpp"
#include "posterkit/core/errors.hpp"
#include "posterkit/core/rng.hpp"
#include "posterkit/ocr/align.hpp"
#include "posterkit/ocr/metrics.hpp"
#include "posterkit/ocr/normalize.hpp"
#include "posterkit/ocr/preference.hpp"

using namespace posterkit;
using namespace posterkit::ocr;

TEST_CASE("normalize_text lowercases, strips punctuation, collapses whitespace") {
  CHECK(normalize_text("Hello,  World!!") == "hello world");
  CHECK(normalize_text("") == "");
  CHECK(normalize_text("A-B\n\nC") == "ab c");
}

TEST_CASE("normalize_text strips the full punctuation set") {
  CHECK(normalize_text(".,;:!?'\"-()[]{}`") == "");
  CHECK(normalize_text("wait\xE2\x80\xA6 now") == "wait now");  // ellipsis
  CHECK(normalize_text("it's COOL (really)") == "its cool really");
}

TEST_CASE("normalize_text trims and handles exotic whitespace") {
  CHECK(normalize_text("  \t padded \r\n ") == "padded");
  CHECK(normalize_text("a\xC2\xA0\x62") == "a b");  // no-break space
}

TEST_CASE("normalize_text lowercases Latin-1 letters") {
  CHECK(normalize_text("\xC3\x89t\xC3\xA9") == "\xC3\xA9t\xC3\xA9");  // Été
}

TEST_CASE("align_chars on identical strings counts only matches") {
  const AlignmentCounts c = align_chars("summer fest", "summer fest");
  CHECK(c.correct == 11);
  CHECK(c.insertions == 0);
  CHECK(c.deletions == 0);
  CHECK(c.substitutions == 0);
}

TEST_CASE("align_chars worked examples") {
  AlignmentCounts c = align_chars("abc", "abd");
  CHECK(c == AlignmentCounts{2, 0, 0, 1});
  c = align_chars("poster", "posters");
  CHECK(c == AlignmentCounts{6, 1, 0, 0});
  c = align_chars("poster", "");
  CHECK(c == AlignmentCounts{0, 0, 6, 0});
  c = align_chars("", "poster");
  CHECK(c == AlignmentCounts{0, 6, 0, 0});
}

TEST_CASE("align_chars swaps insertions and deletions under argument swap") {
  Rng rng(31);
  const std::vector<std::string> pool =
      testsupport::all_strings("abc", 5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string& a = pool[rng.uniform_int(pool.size())];
    const std::string& b = pool[rng.uniform_int(pool.size())];
    const AlignmentCounts fwd = align_chars(a, b);
    const AlignmentCounts rev = align_chars(b, a);
    CHECK(fwd.correct == rev.correct);
    CHECK(fwd.substitutions == rev.substitutions);
    CHECK(fwd.insertions == rev.deletions);
    CHECK(fwd.deletions == rev.insertions);
  }
}

TEST_CASE("align_chars satisfies the length identities") {
  Rng rng(37);
  const std::vector<std::string> pool = testsupport::all_strings("abz", 6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string& gt = pool[rng.uniform_int(pool.size())];
    const std::string& ocr = pool[rng.uniform_int(pool.size())];
    const AlignmentCounts c = align_chars(gt, ocr);
    CHECK(c.gt_length() == static_cast<std::int64_t>(gt.size()));
    CHECK(c.ocr_length() == static_cast<std::int64_t>(ocr.size()));
  }
}

TEST_CASE("align_chars agrees with the independent oracle on sampled pairs") {
  Rng rng(41);
  const std::vector<std::string> pool = testsupport::all_strings("abc", 5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::string& gt = pool[rng.uniform_int(pool.size())];
    const std::string& ocr = pool[rng.uniform_int(pool.size())];
    CHECK(align_chars(gt, ocr) == testsupport::oracle_align(gt, ocr));
  }
}

TEST_CASE("alignment oracle matches literal enumeration on short strings") {
  const std::vector<std::string> pool = testsupport::all_strings("ab", 3);
  for (const std::string& gt : pool) {
    for (const std::string& ocr : pool) {
      CHECK(testsupport::oracle_align(gt, ocr) == testsupport::enumerate_align(gt, ocr));
    }
  }
}

TEST_CASE("align_chars counts Unicode scalars rather than bytes") {
  // Two-codepoint strings whose UTF-8 encodings are four bytes long.
  const AlignmentCounts c = align_chars("\xC3\xA9\xC3\xA8", "\xC3\xA9\xC3\xA8");
  CHECK(c.correct == 2);
}

TEST_CASE("compute_metrics worked examples") {
  OcrMetrics m = compute_metrics({11, 0, 0, 0});
  CHECK(m.accuracy == doctest::Approx(1.0));
  CHECK(m.f_score == doctest::Approx(1.0));

  m = compute_metrics({2, 0, 0, 1});
  CHECK(m.accuracy == doctest::Approx(2.0 / 3.0));
  CHECK(m.precision == doctest::Approx(2.0 / 3.0));
  CHECK(m.recall == doctest::Approx(2.0 / 3.0));
  CHECK(m.f_score == doctest::Approx(2.0 / 3.0));

  m = compute_metrics({6, 1, 0, 0});
  CHECK(m.accuracy == doctest::Approx(6.0 / 7.0));
  CHECK(m.precision == doctest::Approx(6.0 / 7.0));
  CHECK(m.recall == doctest::Approx(1.0));
  CHECK(m.f_score == doctest::Approx(12.0 / 13.0));
}

TEST_CASE("compute_metrics defines the vacuous and degenerate cases") {
  const OcrMetrics empty = compute_metrics({0, 0, 0, 0});
  CHECK(empty.accuracy == 1.0);
  CHECK(empty.precision == 1.0);
  CHECK(empty.recall == 1.0);
  CHECK(empty.f_score == 1.0);

  // OCR produced nothing for a non-empty ground truth.
  const OcrMetrics miss = compute_metrics({0, 0, 4, 0});
  CHECK(miss.accuracy == 0.0);
  CHECK(miss.precision == 0.0);
  CHECK(miss.recall == 0.0);
  CHECK(miss.f_score == 0.0);
}

TEST_CASE("aggregate_corpus takes unweighted means") {
  const OcrMetrics a{1.0, 1.0, 1.0, 1.0};
  const OcrMetrics b{0.5, 0.25, 0.5, 0.1};
  const OcrMetrics single[] = {a};
  const OcrMetrics agg1 = aggregate_corpus(single);
  CHECK(agg1.recall == doctest::Approx(1.0));
  const OcrMetrics both[] = {a, b};
  const OcrMetrics agg = aggregate_corpus(both);
  CHECK(agg.accuracy == doctest::Approx(0.75));
  CHECK(agg.precision == doctest::Approx(0.625));
  CHECK(agg.recall == doctest::Approx(0.75));
  CHECK(agg.f_score == doctest::Approx(0.55));
  CHECK_THROWS_AS(aggregate_corpus({}), std::invalid_argument);
}

TEST_CASE("format_percent renders two decimals") {
  CHECK(format_percent(1.0) == "100.00%");
  CHECK(format_percent(12.0 / 13.0) == "92.31%");
  CHECK(format_percent(0.0) == "0.00%");
  CHECK(format_percent(2.0 / 3.0) == "66.67%");
}

namespace {

const char* kValidPreference = R"({
  "aesthetic_value": "L",
  "aesthetic_value_explanation": "Left layout is cleaner.",
  "prompt_alignment": "none",
  "prompt_alignment_explanation": "Both follow the prompt.",
  "text_accuracy": "R",
  "text_accuracy_explanation": "Right renders the headline correctly.",
  "overall_preference": "R",
  "overall_preference_explanation": "Text accuracy dominates."
})";

}  // namespace

TEST_CASE("parse_preference_response accepts the strict reply shape") {
  const PreferenceResponse r = parse_preference_response(kValidPreference);
  CHECK(r.aesthetic_value == PreferenceChoice::Left);
  CHECK(r.prompt_alignment == PreferenceChoice::None);
  CHECK(r.text_accuracy == PreferenceChoice::Right);
  CHECK(r.overall_preference == PreferenceChoice::Right);
  CHECK(r.overall_preference_explanation == "Text accuracy dominates.");
}

TEST_CASE("parse_preference_response rejects malformed replies") {
  CHECK_THROWS_AS(parse_preference_response("not json"), ParseError);
  CHECK_THROWS_AS(parse_preference_response("[]"), ParseError);
  // Markdown fences are not tolerated.
  CHECK_THROWS_AS(parse_preference_response(std::string("```json\n") + kValidPreference + "\n```"),
                  ParseError);

  std::string missing = kValidPreference;
  missing.replace(missing.find("overall_preference\""), 19, "other_key\"");
  CHECK_THROWS_AS(parse_preference_response(missing), ParseError);

  std::string bad_value = kValidPreference;
  bad_value.replace(bad_value.find("\"R\""), 3, "\"left\"");
  CHECK_THROWS_AS(parse_preference_response(bad_value), ParseError);

  std::string empty_expl = kValidPreference;
  empty_expl.replace(empty_expl.find("Left layout is cleaner."), 23, "");
  CHECK_THROWS_AS(parse_preference_response(empty_expl), ParseError);
}

TEST_CASE("preference_choice_name round-trips the enum") {
  CHECK(preference_choice_name(PreferenceChoice::Left) == std::string("L"));
  CHECK(preference_choice_name(PreferenceChoice::Right) == std::string("R"));
  CHECK(preference_choice_name(PreferenceChoice::None) == std::string("none"));
}
