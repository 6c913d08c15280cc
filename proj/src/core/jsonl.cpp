// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/core/jsonl.hpp"

#include <sstream>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/fsutil.hpp"

namespace posterkit {

Json parse_json(const std::string& text, const std::string& name_for_errors) {
  Json value = Json::parse(text, nullptr, false);
  if (value.is_discarded()) {
    throw ParseError("invalid JSON in " + name_for_errors, text);
  }
  return value;
}

JsonlFile parse_jsonl(const std::string& text, const std::string& name_for_errors) {
  JsonlFile file;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    Json value = Json::parse(line, nullptr, false);
    if (value.is_discarded()) {
      throw ParseError("invalid JSON on line " + std::to_string(line_no) + " of " +
                           name_for_errors,
                       line);
    }
    if (!have_header) {
      if (!value.is_object() || !value.contains("schema")) {
        throw ParseError("missing schema header on line 1 of " + name_for_errors, line);
      }
      file.header = std::move(value);
      have_header = true;
    } else {
      file.records.push_back(std::move(value));
    }
  }
  if (!have_header) {
    throw ParseError("empty manifest: " + name_for_errors, "");
  }
  return file;
}

JsonlFile read_jsonl(const std::filesystem::path& path) {
  return parse_jsonl(read_file(path), path.string());
}

std::string serialize_jsonl(const JsonlFile& file) {
  std::string out = file.header.dump();
  out.push_back('\n');
  for (const Json& record : file.records) {
    out += record.dump();
    out.push_back('\n');
  }
  return out;
}

void write_jsonl(const std::filesystem::path& path, const JsonlFile& file) {
  write_file_atomic(path, serialize_jsonl(file));
}

}  // namespace posterkit
