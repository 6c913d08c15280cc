// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/forge/font.hpp"

#include <algorithm>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/fsutil.hpp"
#include "posterkit/core/jsonl.hpp"
#include "posterkit/core/utf8.hpp"
#include "posterkit/forge/glyphs.hpp"

namespace posterkit::forge {
namespace {

FontInfo make_font(const char* id, FontClass cls, const char* coverage,
                   FontStyle style) {
  FontInfo f;
  f.id = id;
  f.font_class = cls;
  f.coverage = coverage;
  f.style = style;
  return f;
}

}  // namespace

bool FontInfo::covers(std::string_view content) const {
  const std::vector<char32_t> cps = utf8_decode(content);
  for (char32_t cp : cps) {
    if (!find_glyph(cp)) {
      return false;
    }
    if (coverage == "caps-only" && cp >= U'a' && cp <= U'z') {
      return false;
    }
  }
  return true;
}

FontLibrary FontLibrary::builtin() {
  FontLibrary lib;
  lib.fonts_ = {
      make_font("plain-sans", FontClass::Classic, "full", {}),
      make_font("plain-narrow", FontClass::Classic, "full",
                {.width_scale = 0.85}),
      make_font("plain-bold", FontClass::Classic, "full", {.weight = 1.6}),
      make_font("plain-wide", FontClass::Classic, "full",
                {.width_scale = 1.15}),
      make_font("italic-light", FontClass::Stylized, "full",
                {.slant = 0.25, .weight = 0.8}),
      make_font("script-slant", FontClass::Stylized, "full", {.slant = 0.35}),
      make_font("block-heavy", FontClass::Stylized, "full", {.weight = 2.2}),
      make_font("outline-double", FontClass::Stylized, "full",
                {.double_stroke = true}),
      make_font("caps-display", FontClass::Stylized, "caps-only",
                {.weight = 1.3, .width_scale = 1.1}),
  };
  return lib;
}

FontLibrary FontLibrary::load(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  FontLibrary lib;
  for (const auto& path : files) {
    lib.fonts_.push_back(parse_font_json(read_file(path)));
  }
  if (lib.fonts_.empty()) {
    throw ConfigError("font library: no *.json fonts in " + dir.string());
  }
  return lib;
}

const FontInfo* FontLibrary::find(const std::string& id) const {
  for (const FontInfo& f : fonts_) {
    if (f.id == id) {
      return &f;
    }
  }
  return nullptr;
}

std::vector<const FontInfo*> FontLibrary::by_class(FontClass c) const {
  std::vector<const FontInfo*> out;
  for (const FontInfo& f : fonts_) {
    if (f.font_class == c) {
      out.push_back(&f);
    }
  }
  return out;
}

const FontInfo* FontLibrary::select(FontClass c, std::string_view content,
                                    Rng& rng) const {
  std::vector<const FontInfo*> candidates;
  for (const FontInfo& f : fonts_) {
    if (f.font_class == c && f.covers(content)) {
      candidates.push_back(&f);
    }
  }
  if (candidates.empty()) {
    return nullptr;
  }
  return candidates[rng.uniform_int(candidates.size())];
}

namespace {

std::string string_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string()) {
    throw ParseError(std::string("font json: missing string field '") + key +
                     "'");
  }
  return doc[key].get<std::string>();
}

double number_field(const Json& style, const char* key, double fallback) {
  if (!style.contains(key)) {
    return fallback;
  }
  if (!style[key].is_number()) {
    throw ParseError(std::string("font json: style field '") + key +
                     "' must be a number");
  }
  return style[key].get<double>();
}

}  // namespace

FontInfo parse_font_json(const std::string& text) {
  const Json doc = parse_json(text, "font json");
  if (!doc.is_object() || doc.value("schema", "") != "posterkit.font") {
    throw ParseError("font json: missing posterkit.font schema");
  }
  FontInfo f;
  f.id = string_field(doc, "id");
  if (f.id.empty()) {
    throw ParseError("font json: empty id");
  }
  const std::string cls = string_field(doc, "class");
  if (cls == "classic") {
    f.font_class = FontClass::Classic;
  } else if (cls == "stylized") {
    f.font_class = FontClass::Stylized;
  } else {
    throw ParseError("font json: unknown class '" + cls + "'");
  }
  f.coverage = string_field(doc, "coverage");
  if (f.coverage != "full" && f.coverage != "caps-only") {
    throw ParseError("font json: unknown coverage '" + f.coverage + "'");
  }
  if (!doc.contains("style") || !doc["style"].is_object()) {
    throw ParseError("font json: missing style object");
  }
  const Json& style = doc["style"];
  f.style.slant = number_field(style, "slant", 0.0);
  f.style.weight = number_field(style, "weight", 1.0);
  f.style.width_scale = number_field(style, "width_scale", 1.0);
  if (style.contains("double_stroke") && !style["double_stroke"].is_boolean()) {
    throw ParseError("font json: style field 'double_stroke' must be a bool");
  }
  f.style.double_stroke = style.value("double_stroke", false);
  if (f.style.weight <= 0.0 || f.style.width_scale <= 0.0 ||
      f.style.slant < 0.0) {
    throw ParseError("font json: style values out of range");
  }
  return f;
}

std::string font_to_json(const FontInfo& font) {
  Json doc;
  doc["schema"] = "posterkit.font";
  doc["id"] = font.id;
  doc["class"] = font_class_name(font.font_class);
  doc["coverage"] = font.coverage;
  doc["style"] = {
      {"slant", font.style.slant},
      {"weight", font.style.weight},
      {"width_scale", font.style.width_scale},
      {"double_stroke", font.style.double_stroke},
  };
  return doc.dump(2) + "\n";
}

}  // namespace posterkit::forge
