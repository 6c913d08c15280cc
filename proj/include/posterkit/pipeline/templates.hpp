// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace posterkit::pipeline {

// A named slot in a prompt template. `name` is the key callers pass when
// rendering; `literal` is the exact marker text inside the template body.
// Marker spellings vary between templates and are preserved as-is.
struct TemplateSlot {
  std::string name;
  std::string literal;
};

struct PromptTemplate {
  std::string id;
  std::string text;
  std::vector<TemplateSlot> slots;
};

// The fixed set of judge and annotator prompts shipped with the toolkit.
// The compiled-in copies are the source of truth; the files under
// assets/prompts are exported from them and kept in sync by tests.
class TemplateCatalog {
 public:
  static const TemplateCatalog& builtin();

  // Loads <dir>/<id>.txt for every known id. A missing file raises IoError.
  static TemplateCatalog load(const std::filesystem::path& dir);

  static const std::vector<std::string>& known_ids();

  const PromptTemplate& get(const std::string& id) const;
  bool contains(const std::string& id) const;

 private:
  std::map<std::string, PromptTemplate> templates_;
};

// Substitutes every slot marker with its argument, then collapses the doubled
// braces that escape literal { and } in template bodies. The argument map
// must match the template's slots exactly: a missing or unknown name raises
// ConfigError. Argument values are inserted verbatim.
std::string render_template(const PromptTemplate& tpl,
                            const std::map<std::string, std::string>& args);

}  // namespace posterkit::pipeline
