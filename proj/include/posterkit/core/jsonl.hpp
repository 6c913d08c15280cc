// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace posterkit {

using Json = nlohmann::ordered_json;

// A JSONL manifest: one header object on the first line, one record per
// following line. The header carries at least {"schema": ..., "version": ...}.
struct JsonlFile {
  Json header;
  std::vector<Json> records;
};

JsonlFile read_jsonl(const std::filesystem::path& path);
JsonlFile parse_jsonl(const std::string& text, const std::string& name_for_errors);

std::string serialize_jsonl(const JsonlFile& file);
void write_jsonl(const std::filesystem::path& path, const JsonlFile& file);

Json parse_json(const std::string& text, const std::string& name_for_errors);

}  // namespace posterkit
