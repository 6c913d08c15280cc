// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cctype>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/image_io.hpp"
#include "posterkit/core/rng.hpp"
#include "posterkit/forge/config.hpp"
#include "posterkit/forge/content.hpp"
#include "posterkit/forge/engine.hpp"
#include "posterkit/forge/font.hpp"
#include "posterkit/forge/glyphs.hpp"
#include "posterkit/forge/layout.hpp"
#include "posterkit/forge/prompt.hpp"
#include "posterkit/forge/render.hpp"
#include "posterkit/forge/types.hpp"
#include "posterkit/forge/vocabulary.hpp"

namespace fs = std::filesystem;
using namespace posterkit;
using namespace posterkit::forge;

namespace {

fs::path temp_dir(const char* tag) {
  fs::path dir = fs::temp_directory_path() / (std::string("posterkit_forge_") + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

FontInfo test_font(std::string id, FontClass cls, std::string coverage) {
  FontInfo f;
  f.id = std::move(id);
  f.font_class = cls;
  f.coverage = std::move(coverage);
  return f;
}

bool rect_inside(const PixelRect& inner, const PixelRect& outer) {
  return inner.x0 >= outer.x0 && inner.y0 >= outer.y0 &&
         inner.x1 <= outer.x1 && inner.y1 <= outer.y1;
}

ForgeEngine procedural_engine(GenerationConfig config) {
  return ForgeEngine(config, Vocabulary::builtin(), FontLibrary::builtin(),
                     BackgroundProvider::procedural());
}

}  // namespace

TEST_CASE("glyph table covers letters, digits and basic punctuation") {
  const std::string needed =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789 "
      ".,!?'-:";
  CHECK(glyphs_cover(needed));
  CHECK(!glyphs_cover("caf\xC3\xA9"));
  CHECK(!glyphs_cover("\xCE\xA9mega"));
  CHECK(find_glyph(U'A') != nullptr);
  CHECK(find_glyph(U'~') == nullptr);
  CHECK(builtin_glyph_codepoints().size() == needed.size());
}

TEST_CASE("glyph geometry stays on the design grid") {
  for (char32_t cp : builtin_glyph_codepoints()) {
    const Glyph* glyph = find_glyph(cp);
    REQUIRE(glyph != nullptr);
    CHECK(glyph->advance >= 3);
    CHECK(glyph->advance <= 8);
    if (cp == U' ') {
      CHECK(glyph->strokes.empty());
      continue;
    }
    CHECK(!glyph->strokes.empty());
    for (const GlyphPolyline& stroke : glyph->strokes) {
      REQUIRE(!stroke.empty());
      for (const GlyphPoint& p : stroke) {
        CHECK(p.x >= 0.0);
        CHECK(p.x <= glyph->advance - 1);
        CHECK(p.y >= 1.0);
        CHECK(p.y <= 11.0);
      }
    }
  }
}

TEST_CASE("rect overlap honours padding") {
  const PixelRect a{0, 0, 10, 10};
  CHECK(rects_overlap(a, PixelRect{5, 5, 15, 15}, 0));
  CHECK(!rects_overlap(a, PixelRect{10, 0, 20, 10}, 0));  // edge contact
  CHECK(rects_overlap(a, PixelRect{10, 0, 20, 10}, 1));
  CHECK(!rects_overlap(a, PixelRect{12, 0, 20, 10}, 2));
  CHECK(rects_overlap(a, PixelRect{12, 0, 20, 10}, 3));
  CHECK(rects_overlap(a, PixelRect{2, 2, 4, 4}, 0));  // containment
}

TEST_CASE("palette lookup by name") {
  CHECK(palette_index_by_name("red") == 2);
  CHECK(palette_index_by_name("gray") == 11);
  CHECK(palette_index_by_name("crimson") == -1);
  CHECK(kPalette.size() == 12);
}

TEST_CASE("generation config validation") {
  GenerationConfig config;
  CHECK_NOTHROW(config.validate());

  GenerationConfig bad = config;
  bad.alphanumeric_fraction = 1.5;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad = config;
  bad.canvas_height = 32;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad = config;
  bad.rotation_min_deg = 10.0;
  bad.rotation_max_deg = -10.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad = config;
  bad.instance_count_weights = {0.0, 0.0, 0.0};
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad = config;
  bad.retry_font_scale = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad = config;
  bad.max_placement_attempts = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("vocabulary asset files mirror the builtin lists") {
  const Vocabulary builtin = Vocabulary::builtin();
  CHECK_NOTHROW(builtin.validate());

  const Vocabulary loaded =
      Vocabulary::load(fs::path(POSTERKIT_SOURCE_DIR) / "assets" / "vocab");
  CHECK(loaded.adjectives == builtin.adjectives);
  CHECK(loaded.nouns == builtin.nouns);
  CHECK(loaded.verbs == builtin.verbs);
}

TEST_CASE("vocabulary validation rejects empty and undrawable lists") {
  Vocabulary v = Vocabulary::builtin();
  v.verbs.clear();
  CHECK_THROWS_AS(v.validate(), ConfigError);

  v = Vocabulary::builtin();
  v.nouns.push_back("caf\xC3\xA9");
  CHECK_THROWS_AS(v.validate(), ConfigError);

  CHECK_THROWS_AS(Vocabulary::load(temp_dir("novocab")), IoError);
}

TEST_CASE("font coverage respects glyphs and case restrictions") {
  const FontLibrary lib = FontLibrary::builtin();
  CHECK(lib.fonts().size() == 9);
  CHECK(lib.by_class(FontClass::Classic).size() == 4);
  CHECK(lib.by_class(FontClass::Stylized).size() == 5);

  const FontInfo* caps = lib.find("caps-display");
  REQUIRE(caps != nullptr);
  CHECK(caps->covers("HELLO 42!"));
  CHECK(!caps->covers("Hello"));

  const FontInfo* sans = lib.find("plain-sans");
  REQUIRE(sans != nullptr);
  CHECK(sans->covers("Hello"));
  CHECK(!sans->covers("\xCE\xA9mega"));
  CHECK(lib.find("missing-font") == nullptr);
}

TEST_CASE("font selection filters to fonts that can draw the content") {
  const FontLibrary lib(
      {test_font("caps", FontClass::Classic, "caps-only"),
       test_font("full", FontClass::Classic, "full")});
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const FontInfo* chosen = lib.select(FontClass::Classic, "abc", rng);
    REQUIRE(chosen != nullptr);
    CHECK(chosen->id == "full");
  }

  // Uppercase content qualifies both fonts; both should be seen.
  std::set<std::string> seen;
  for (int i = 0; i < 200; ++i) {
    seen.insert(lib.select(FontClass::Classic, "ABC", rng)->id);
  }
  CHECK(seen == std::set<std::string>{"caps", "full"});

  CHECK(lib.select(FontClass::Stylized, "abc", rng) == nullptr);
}

TEST_CASE("builtin fonts never hand caps-only fonts lowercase work") {
  const FontLibrary lib = FontLibrary::builtin();
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const FontInfo* chosen = lib.select(FontClass::Stylized, "mixed Case", rng);
    REQUIRE(chosen != nullptr);
    CHECK(chosen->id != "caps-display");
    CHECK(chosen->font_class == FontClass::Stylized);
  }
}

TEST_CASE("font asset files mirror the builtin library") {
  const FontLibrary builtin = FontLibrary::builtin();
  const FontLibrary loaded =
      FontLibrary::load(fs::path(POSTERKIT_SOURCE_DIR) / "assets" / "fonts");
  REQUIRE(loaded.fonts().size() == builtin.fonts().size());
  for (const FontInfo& expect : builtin.fonts()) {
    const FontInfo* got = loaded.find(expect.id);
    REQUIRE(got != nullptr);
    CHECK(got->font_class == expect.font_class);
    CHECK(got->coverage == expect.coverage);
    CHECK(got->style.slant == expect.style.slant);
    CHECK(got->style.weight == expect.style.weight);
    CHECK(got->style.width_scale == expect.style.width_scale);
    CHECK(got->style.double_stroke == expect.style.double_stroke);
  }
}

TEST_CASE("font json parsing is strict") {
  CHECK_THROWS_AS(parse_font_json("{}"), ParseError);
  CHECK_THROWS_AS(parse_font_json("not json"), ParseError);
  CHECK_THROWS_AS(
      parse_font_json(R"({"schema":"posterkit.font","id":"x","class":"fancy",
                          "coverage":"full","style":{}})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_font_json(R"({"schema":"posterkit.font","id":"x","class":"classic",
                          "coverage":"most","style":{}})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_font_json(R"({"schema":"posterkit.font","id":"x","class":"classic",
                          "coverage":"full","style":{"weight":-1}})"),
      ParseError);

  const FontInfo ok = parse_font_json(
      R"({"schema":"posterkit.font","id":"x","class":"classic",
          "coverage":"full","style":{"slant":0.1}})");
  CHECK(ok.id == "x");
  CHECK(ok.style.slant == 0.1);
  CHECK(ok.style.weight == 1.0);
}

TEST_CASE("content generator alphanumeric branch") {
  GenerationConfig config;
  config.alphanumeric_fraction = 1.0;
  const Vocabulary vocab = Vocabulary::builtin();
  Rng rng(3);
  std::set<std::size_t> lengths;
  for (int i = 0; i < 2000; ++i) {
    const std::string s = generate_text_content(rng, config, vocab);
    CHECK(s.size() >= 3);
    CHECK(s.size() <= 12);
    lengths.insert(s.size());
    for (char c : s) {
      CHECK(std::isalnum(static_cast<unsigned char>(c)));
    }
  }
  // Every permitted length shows up over this many draws.
  CHECK(lengths.size() == 10);
}

TEST_CASE("content generator phrase branch") {
  GenerationConfig config;
  config.alphanumeric_fraction = 0.0;
  const Vocabulary vocab = Vocabulary::builtin();
  Rng rng(4);
  bool saw_upper = false;
  bool saw_lower_start = false;
  bool saw_multi_word = false;
  bool saw_bang = false;
  for (int i = 0; i < 600; ++i) {
    const std::string s = generate_text_content(rng, config, vocab);
    REQUIRE(!s.empty());
    CHECK(s.size() <= 48);
    CHECK(s.find('"') == std::string::npos);
    for (char c : s) {
      const bool ok = std::isalpha(static_cast<unsigned char>(c)) ||
                      c == ' ' || c == '!' || c == '?' || c == '.';
      CHECK(ok);
    }
    if (s == [](std::string t) {
          for (char& c : t) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
          return t;
        }(s) &&
        s.find_first_of("ABCDEFGHIJKLMNOPQRSTUVWXYZ") != std::string::npos) {
      saw_upper = true;
    }
    if (std::islower(static_cast<unsigned char>(s[0]))) {
      saw_lower_start = true;
    }
    if (s.find(' ') != std::string::npos) {
      saw_multi_word = true;
    }
    if (s.back() == '!') {
      saw_bang = true;
    }
  }
  CHECK(saw_upper);
  CHECK(saw_lower_start);
  CHECK(saw_multi_word);
  CHECK(saw_bang);
}

TEST_CASE("singleton vocabulary pins the adjective-noun phrase") {
  GenerationConfig config;
  config.alphanumeric_fraction = 0.0;
  Vocabulary vocab;
  vocab.adjectives = {"Golden"};
  vocab.nouns = {"Festival"};
  vocab.verbs = {"Seek"};
  Rng rng(1);
  bool saw_exact = false;
  for (int i = 0; i < 400 && !saw_exact; ++i) {
    saw_exact = generate_text_content(rng, config, vocab) == "Golden Festival";
  }
  CHECK(saw_exact);
}

TEST_CASE("alphanumeric share tracks the configured fraction") {
  GenerationConfig config;
  config.alphanumeric_fraction = 0.15;
  // Marker vocabulary: every phrase ends in a hyphenated noun, so the two
  // branches never produce the same string shape.
  Vocabulary vocab;
  vocab.adjectives = {"neo-bright"};
  vocab.nouns = {"night-fair"};
  vocab.verbs = {"re-mix"};
  Rng rng(99);
  int alnum = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    const std::string s = generate_text_content(rng, config, vocab);
    if (s.find('-') == std::string::npos) {
      ++alnum;
    }
  }
  const double share = static_cast<double>(alnum) / trials;
  CHECK(share > 0.13);
  CHECK(share < 0.17);
}

TEST_CASE("cell bounds partition the canvas") {
  // The worked grid: a 1024 canvas splits into three 342-wide bands.
  CHECK(cell_bounds({0, 0}, 1024, 1024) == PixelRect{0, 0, 342, 342});
  CHECK(cell_bounds({1, 1}, 1024, 1024) == PixelRect{341, 341, 683, 683});
  CHECK(cell_bounds({2, 2}, 1024, 1024) == PixelRect{682, 682, 1024, 1024});

  for (int extent : {256, 300, 341, 1000, 1024}) {
    int prev_hi = 0;
    for (int k = 0; k < 3; ++k) {
      const PixelRect r = cell_bounds({0, k}, extent, extent);
      CHECK(r.x0 <= prev_hi);  // bands cover the axis with no gap
      CHECK(r.x1 > r.x0);
      prev_hi = r.x1;
    }
    CHECK(prev_hi == extent);
    CHECK(cell_bounds({0, 0}, extent, extent).x0 == 0);
  }
}

TEST_CASE("measurement wraps horizontal text at spaces") {
  TextInstanceSpec spec;
  spec.content = "the amber festival parade";
  spec.orientation = Orientation::Horizontal;
  const FontStyle plain;
  const double wrap_px = 0.9 * 342;
  const auto geom = measure_instance(spec, plain, 48, wrap_px, 3);
  REQUIRE(geom.has_value());
  CHECK(geom->lines.size() >= 2);
  CHECK(geom->lines.size() <= 3);

  std::string joined;
  for (const std::string& line : geom->lines) {
    if (!joined.empty()) {
      joined += " ";
    }
    joined += line;
    const bool single_word = line.find(' ') == std::string::npos;
    const double limit_units = wrap_px / (48.0 / 12.0);
    CHECK((single_word || line_width_units(line, plain) <= limit_units));
  }
  CHECK(joined == spec.content);

  // The same text cannot be wrapped into a single line.
  CHECK(!measure_instance(spec, plain, 48, wrap_px, 1).has_value());
}

TEST_CASE("measurement of stacked and rotated orientations") {
  const FontStyle plain;
  TextInstanceSpec spec;
  spec.content = "Neon!";

  spec.orientation = Orientation::VerticalStacked;
  const auto stacked = measure_instance(spec, plain, 48, 0.0, 3);
  REQUIRE(stacked.has_value());
  CHECK(stacked->lines ==
        std::vector<std::string>{"N", "e", "o", "n", "!"});
  CHECK(stacked->box_h_px > stacked->box_w_px);

  spec.orientation = Orientation::Horizontal;
  const auto horizontal = measure_instance(spec, plain, 48, 0.0, 3);
  REQUIRE(horizontal.has_value());

  spec.orientation = Orientation::VerticalRotated;
  const auto rotated = measure_instance(spec, plain, 48, 0.0, 3);
  REQUIRE(rotated.has_value());
  CHECK(rotated->lines == std::vector<std::string>{"Neon!"});
  CHECK(rotated->text_w_px == horizontal->text_w_px);
  CHECK(rotated->text_h_px == horizontal->text_h_px);
  CHECK(rotated->box_w_px == rotated->text_h_px);
  CHECK(rotated->box_h_px == rotated->text_w_px);

  spec.orientation = Orientation::Horizontal;
  spec.rotation_deg = 15.0;
  const auto tilted = measure_instance(spec, plain, 48, 0.0, 3);
  REQUIRE(tilted.has_value());
  CHECK(tilted->box_w_px >= tilted->text_w_px - 1);
  CHECK(tilted->box_h_px >= tilted->text_h_px);
}

TEST_CASE("layout keeps a lone instance inside its cell") {
  GenerationConfig config;
  const FontLibrary fonts = FontLibrary::builtin();

  TextInstanceSpec spec;
  spec.content = "Hi";
  spec.font_id = "plain-sans";
  spec.cell = {0, 0};
  spec.alignment = Alignment::Left;
  spec.font_size_px = 40;

  Rng rng(5);
  const auto placed = plan_layout({&spec, 1}, fonts, rng, config);
  REQUIRE(placed.size() == 1);
  CHECK(placed[0].spec.cell == GridCell{0, 0});
  CHECK(placed[0].box.x0 == 0);  // left aligned in the leftmost band
  CHECK(rect_inside(placed[0].box, PixelRect{0, 0, 342, 342}));
  CHECK(placed[0].font_size_px == 40);

  spec.alignment = Alignment::Right;
  Rng rng2(5);
  const auto right = plan_layout({&spec, 1}, fonts, rng2, config);
  REQUIRE(right.size() == 1);
  CHECK(right[0].box.x1 == 342);
}

TEST_CASE("layout drops instances that cannot fit") {
  GenerationConfig config;
  const FontLibrary fonts = FontLibrary::builtin();

  TextInstanceSpec spec;
  spec.content = "ABCDEFGHIJKLMNOPQRSTUVWXYZABCDEFGHIJKLMN";
  spec.font_id = "plain-sans";
  spec.orientation = Orientation::VerticalStacked;  // forty lines tall
  spec.cell = {1, 1};
  spec.font_size_px = 96;

  Rng rng(8);
  CHECK(plan_layout({&spec, 1}, fonts, rng, config).empty());
}

TEST_CASE("layout separates colliding instances across retries") {
  GenerationConfig config;
  const FontLibrary fonts = FontLibrary::builtin();
  const char* words[3] = {"Summit", "Parade", "Bazaar"};

  int total_placed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<TextInstanceSpec> specs;
    for (int i = 0; i < 3; ++i) {
      TextInstanceSpec spec;
      spec.content = words[i];
      spec.font_id = "plain-bold";
      spec.cell = {1, 1};  // force an initial pile-up
      spec.alignment = static_cast<Alignment>(i);
      spec.font_size_px = 80;
      specs.push_back(spec);
    }
    Rng rng(static_cast<std::uint64_t>(trial));
    const auto placed = plan_layout(specs, fonts, rng, config);
    total_placed += static_cast<int>(placed.size());
    for (std::size_t i = 0; i < placed.size(); ++i) {
      const PixelRect cell = cell_bounds(placed[i].spec.cell,
                                         config.canvas_width,
                                         config.canvas_height);
      CHECK(rect_inside(placed[i].box, cell));
      CHECK(rect_inside(placed[i].box,
                        PixelRect{0, 0, config.canvas_width,
                                  config.canvas_height}));
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(!rects_overlap(placed[i].box, placed[j].box,
                             config.collision_padding_px));
      }
    }
  }
  // Retries should rescue most of the contention.
  CHECK(total_placed > 250);
}

TEST_CASE("render leaves pixels outside boxes untouched") {
  GenerationConfig config;
  config.canvas_width = 256;
  config.canvas_height = 256;
  const FontLibrary fonts = FontLibrary::builtin();
  const ImageU8 background(256, 256, 3, 200);

  CHECK(render_sample(background, {}, fonts, config).data == background.data);

  TextInstanceSpec spec;
  spec.content = "A";
  spec.font_id = "plain-bold";
  spec.cell = {1, 1};
  spec.alignment = Alignment::Center;
  spec.font_size_px = 60;
  spec.rgb = {10, 20, 30};

  Rng rng(2);
  const auto placed = plan_layout({&spec, 1}, fonts, rng, config);
  REQUIRE(placed.size() == 1);
  const ImageU8 out = render_sample(background, placed, fonts, config);

  int changed_inside = 0;
  for (int y = 0; y < 256; ++y) {
    for (int x = 0; x < 256; ++x) {
      const bool inside = x >= placed[0].box.x0 && x < placed[0].box.x1 &&
                          y >= placed[0].box.y0 && y < placed[0].box.y1;
      const std::uint8_t* got = out.pixel(x, y);
      const std::uint8_t* want = background.pixel(x, y);
      if (inside) {
        changed_inside += (got[0] != want[0] || got[1] != want[1] ||
                           got[2] != want[2]);
      } else {
        REQUIRE(got[0] == want[0]);
        REQUIRE(got[1] == want[1]);
        REQUIRE(got[2] == want[2]);
      }
    }
  }
  CHECK(changed_inside > 0);
}

TEST_CASE("render center-crops large backgrounds and rejects small ones") {
  GenerationConfig config;
  config.canvas_width = 256;
  config.canvas_height = 256;
  const FontLibrary fonts = FontLibrary::builtin();

  ImageU8 big(300, 300, 1);
  for (int y = 0; y < 300; ++y) {
    for (int x = 0; x < 300; ++x) {
      *big.pixel(x, y) = static_cast<std::uint8_t>((x + 2 * y) % 251);
    }
  }
  const ImageU8 out = render_sample(big, {}, fonts, config);
  CHECK(out.channels == 3);
  // Offset (300-256)/2 = 22 on both axes; gray replicates across channels.
  CHECK(out.pixel(0, 0)[0] == *big.pixel(22, 22));
  CHECK(out.pixel(0, 0)[2] == *big.pixel(22, 22));
  CHECK(out.pixel(255, 255)[1] == *big.pixel(277, 277));

  const ImageU8 small(200, 256, 3);
  CHECK_THROWS_AS(render_sample(small, {}, fonts, config), ConfigError);
}

TEST_CASE("double stroke fonts paint an outline and a dark core") {
  GenerationConfig config;
  config.canvas_width = 256;
  config.canvas_height = 256;
  const FontLibrary fonts = FontLibrary::builtin();
  const ImageU8 background(256, 256, 3, 255);

  TextInstanceSpec spec;
  spec.content = "O";
  spec.font_id = "outline-double";
  spec.cell = {1, 1};
  spec.font_size_px = 80;
  spec.rgb = {200, 30, 30};

  Rng rng(6);
  const auto placed = plan_layout({&spec, 1}, fonts, rng, config);
  REQUIRE(placed.size() == 1);
  const ImageU8 out = render_sample(background, placed, fonts, config);

  bool saw_outline = false;
  bool saw_core = false;
  for (int y = placed[0].box.y0; y < placed[0].box.y1; ++y) {
    for (int x = placed[0].box.x0; x < placed[0].box.x1; ++x) {
      const std::uint8_t* px = out.pixel(x, y);
      if (px[0] == 200 && px[1] == 30 && px[2] == 30) {
        saw_outline = true;
      }
      if (px[0] == 50 && px[1] == 7 && px[2] == 7) {
        saw_core = true;
      }
    }
  }
  CHECK(saw_outline);
  CHECK(saw_core);
}

TEST_CASE("prompt synthesis emits the documented clause grammar") {
  PlacedInstance inst;
  inst.spec.content = "Silver Tide";
  inst.spec.cell = {2, 2};
  inst.spec.orientation = Orientation::Horizontal;
  inst.spec.color_index = 2;  // red
  inst.spec.mention_font = false;

  CHECK(synthesize_prompt({&inst, 1}) ==
        "The text \"Silver Tide\" appears in the bottom right, oriented "
        "horizontally, in red color.");

  inst.spec.mention_font = true;
  inst.spec.font_class = FontClass::Stylized;
  inst.spec.cell = {1, 1};
  inst.spec.orientation = Orientation::VerticalStacked;
  CHECK(synthesize_prompt({&inst, 1}) ==
        "The text \"Silver Tide\" appears in the center, stacked vertically, "
        "in red color, in a stylized font style.");

  PlacedInstance second;
  second.spec.content = "X9J";
  second.spec.cell = {0, 1};
  second.spec.orientation = Orientation::VerticalRotated;
  second.spec.color_index = 7;  // blue
  const PlacedInstance pair[2] = {inst, second};
  CHECK(synthesize_prompt(pair) ==
        "1. The text \"Silver Tide\" appears in the center, stacked "
        "vertically, in red color, in a stylized font style. 2. The text "
        "\"X9J\" appears in the top center, rotated vertically, in blue "
        "color.");

  CHECK(synthesize_prompt({}) == kNoTextPrompt);
}

TEST_CASE("prompt parsing inverts synthesis and rejects malformed input") {
  const ParsedPrompt empty = parse_prompt(kNoTextPrompt);
  CHECK(empty.no_text);
  CHECK(empty.clauses.empty());

  const ParsedPrompt one = parse_prompt(
      "The text \"Hi there\" appears in the middle left, oriented "
      "horizontally, in cyan color, in a classic font style.");
  REQUIRE(one.clauses.size() == 1);
  CHECK(one.clauses[0].content == "Hi there");
  CHECK(one.clauses[0].cell == GridCell{1, 0});
  CHECK(one.clauses[0].orientation == Orientation::Horizontal);
  CHECK(one.clauses[0].color == "cyan");
  REQUIRE(one.clauses[0].font_class.has_value());
  CHECK(*one.clauses[0].font_class == FontClass::Classic);

  const ParsedPrompt two = parse_prompt(
      "1. The text \"a\" appears in the top left, oriented horizontally, in "
      "red color. 2. The text \"b\" appears in the bottom center, stacked "
      "vertically, in pink color.");
  REQUIRE(two.clauses.size() == 2);
  CHECK(two.clauses[1].content == "b");
  CHECK(two.clauses[1].cell == GridCell{2, 1});
  CHECK(!two.clauses[1].font_class.has_value());

  CHECK_THROWS_AS(parse_prompt(""), ParseError);
  CHECK_THROWS_AS(parse_prompt("The image contains no rendered text"),
                  ParseError);  // missing period
  CHECK_THROWS_AS(
      parse_prompt("The text \"x\" appears in the nowhere, oriented "
                   "horizontally, in red color."),
      ParseError);
  CHECK_THROWS_AS(
      parse_prompt("The text \"x\" appears in the top left, oriented "
                   "horizontally, in crimson color."),
      ParseError);
  CHECK_THROWS_AS(
      parse_prompt("The text \"x appears in the top left, oriented "
                   "horizontally, in red color."),
      ParseError);
  CHECK_THROWS_AS(
      parse_prompt("The text \"x\" appears in the top left, oriented "
                   "horizontally, in red color. trailing"),
      ParseError);
  CHECK_THROWS_AS(
      parse_prompt("1. The text \"x\" appears in the top left, oriented "
                   "horizontally, in red color."),
      ParseError);  // numbered prompt needs at least two clauses
  CHECK_THROWS_AS(
      parse_prompt("1. The text \"a\" appears in the top left, oriented "
                   "horizontally, in red color. 3. The text \"b\" appears in "
                   "the top right, oriented horizontally, in red color."),
      ParseError);  // clause numbers must be consecutive
}

TEST_CASE("prompts round-trip for generated samples") {
  GenerationConfig config;
  config.canvas_width = 512;
  config.canvas_height = 512;
  config.master_seed = 2026;
  const ForgeEngine engine = procedural_engine(config);

  int clauses_checked = 0;
  for (std::uint64_t index = 0; index < 300; ++index) {
    const ForgeSample sample = engine.generate_sample(index);
    const ParsedPrompt parsed = parse_prompt(sample.prompt);
    if (sample.instances.empty()) {
      CHECK(parsed.no_text);
      continue;
    }
    REQUIRE(parsed.clauses.size() == sample.instances.size());
    for (std::size_t i = 0; i < sample.instances.size(); ++i) {
      const TextInstanceSpec& spec = sample.instances[i].spec;
      const PromptClause& clause = parsed.clauses[i];
      CHECK(clause.content == spec.content);
      CHECK(clause.cell == spec.cell);
      CHECK(clause.orientation == spec.orientation);
      CHECK(clause.color ==
            kPalette[static_cast<std::size_t>(spec.color_index)].name);
      CHECK(clause.font_class.has_value() == spec.mention_font);
      if (clause.font_class.has_value()) {
        CHECK(*clause.font_class == spec.font_class);
      }
      ++clauses_checked;
    }
  }
  // The 512px canvas drops a fair number of placements; what matters is
  // that every clause that did render parses back exactly.
  CHECK(clauses_checked > 200);
}

TEST_CASE("engine output is deterministic and stateless") {
  GenerationConfig config;
  config.canvas_width = 512;
  config.canvas_height = 512;
  config.master_seed = 7;

  const ForgeEngine a = procedural_engine(config);
  const ForgeEngine b = procedural_engine(config);

  const ForgeSample first = a.generate_sample(13);
  for (std::uint64_t i = 0; i < 5; ++i) {
    (void)a.generate_sample(i);
  }
  const ForgeSample again = a.generate_sample(13);
  const ForgeSample other = b.generate_sample(13);

  CHECK(first.image.data == again.image.data);
  CHECK(first.image.data == other.image.data);
  CHECK(first.prompt == other.prompt);
  CHECK(first.background_id == other.background_id);
  CHECK(a.manifest_record(first, "s13").dump() ==
        b.manifest_record(other, "s13").dump());

  // Different indices give different seeds and, in practice, images.
  const ForgeSample different = a.generate_sample(14);
  CHECK(different.seed != first.seed);
  CHECK(different.image.data != first.image.data);
}

TEST_CASE("engine enforces sample invariants") {
  GenerationConfig config;
  config.canvas_width = 512;
  config.canvas_height = 512;
  config.master_seed = 31;
  const ForgeEngine engine = procedural_engine(config);

  std::set<Orientation> orientations;
  int counts[4] = {0, 0, 0, 0};
  for (std::uint64_t index = 0; index < 200; ++index) {
    const ForgeSample sample = engine.generate_sample(index);
    REQUIRE(sample.requested_count >= 1);
    REQUIRE(sample.requested_count <= 3);
    ++counts[sample.requested_count];
    CHECK(sample.instances.size() <=
          static_cast<std::size_t>(sample.requested_count));
    for (std::size_t i = 0; i < sample.instances.size(); ++i) {
      const PlacedInstance& inst = sample.instances[i];
      orientations.insert(inst.spec.orientation);
      if (inst.spec.orientation != Orientation::Horizontal) {
        CHECK(inst.spec.rotation_deg == 0.0);
      }
      CHECK(rect_inside(inst.box, cell_bounds(inst.spec.cell, 512, 512)));
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(!rects_overlap(inst.box, sample.instances[j].box,
                             config.collision_padding_px));
      }
    }
  }
  CHECK(counts[1] > 0);
  CHECK(counts[2] > 0);
  CHECK(counts[3] > 0);
  CHECK(orientations.count(Orientation::Horizontal) == 1);
  CHECK(orientations.size() >= 2);
}

TEST_CASE("manifest records carry the documented fields") {
  GenerationConfig config;
  config.canvas_width = 512;
  config.canvas_height = 512;
  const ForgeEngine engine = procedural_engine(config);

  for (std::uint64_t index = 0; index < 20; ++index) {
    const ForgeSample sample = engine.generate_sample(index);
    const Json record = engine.manifest_record(sample, "sample-x");
    CHECK(record["id"] == "sample-x");
    CHECK(record["seed"] == sample.seed);
    CHECK(record["prompt"] == sample.prompt);
    CHECK(record["background_id"] == sample.background_id);
    REQUIRE(record["instances"].size() == sample.instances.size());
    for (std::size_t i = 0; i < sample.instances.size(); ++i) {
      const Json& inst = record["instances"][i];
      CHECK(inst["content"] == sample.instances[i].spec.content);
      REQUIRE(inst["box"].size() == 4);
      CHECK(inst["box"][0] == sample.instances[i].box.x0);
      CHECK(inst["box"][3] == sample.instances[i].box.y1);
      CHECK(inst.contains("orientation"));
      CHECK(inst.contains("color"));
      CHECK(inst.contains("font_id"));
    }
  }
}

TEST_CASE("directory backgrounds are picked from the sorted file set") {
  const fs::path dir = temp_dir("bgdir");
  write_png(dir / "bg-a.png", ImageU8(300, 300, 3, 10));
  write_png(dir / "bg-b.png", ImageU8(256, 256, 3, 200));

  GenerationConfig config;
  config.canvas_width = 256;
  config.canvas_height = 256;
  const ForgeEngine engine(config, Vocabulary::builtin(),
                           FontLibrary::builtin(),
                           BackgroundProvider::directory(dir));

  std::set<std::string> ids;
  for (std::uint64_t index = 0; index < 40; ++index) {
    ids.insert(engine.generate_sample(index).background_id);
  }
  CHECK(ids == std::set<std::string>{"bg-a", "bg-b"});
}

TEST_CASE("undersized directory backgrounds fail at render time") {
  const fs::path dir = temp_dir("bgsmall");
  write_png(dir / "tiny.png", ImageU8(128, 128, 3, 50));

  GenerationConfig config;
  config.canvas_width = 256;
  config.canvas_height = 256;
  const ForgeEngine engine(config, Vocabulary::builtin(),
                           FontLibrary::builtin(),
                           BackgroundProvider::directory(dir));
  CHECK_THROWS_AS(engine.generate_sample(0), ConfigError);

  CHECK_THROWS_AS(BackgroundProvider::directory(temp_dir("bgempty")),
                  ConfigError);
}
