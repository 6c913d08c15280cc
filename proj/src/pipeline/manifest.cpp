// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/pipeline/manifest.hpp"

#include "posterkit/core/digest.hpp"
#include "posterkit/core/errors.hpp"
#include "posterkit/core/fsutil.hpp"

namespace posterkit::pipeline {

Json manifest_header(const std::string& schema_name) {
  Json header;
  header["schema"] = schema_name;
  header["version"] = kManifestVersion;
  return header;
}

JsonlFile load_manifest(const std::filesystem::path& path, const std::string& expected_schema) {
  JsonlFile file = read_jsonl(path);
  const Json& header = file.header;
  if (!header["schema"].is_string() || header["schema"].get<std::string>() != expected_schema) {
    throw ParseError(path.string() + ": expected schema '" + expected_schema + "'",
                     header.dump());
  }
  if (!header.contains("version") || !header["version"].is_number_integer() ||
      header["version"].get<int>() != kManifestVersion) {
    throw ParseError(path.string() + ": unsupported manifest version", header.dump());
  }
  return file;
}

std::string serialize_manifest(const std::string& schema_name,
                               const std::vector<Json>& records) {
  JsonlFile file;
  file.header = manifest_header(schema_name);
  file.records = records;
  return serialize_jsonl(file);
}

std::string write_manifest(const std::filesystem::path& path, const std::string& schema_name,
                           const std::vector<Json>& records) {
  const std::string bytes = serialize_manifest(schema_name, records);
  write_file_atomic(path, bytes);
  return sha256_hex(bytes);
}

const Json& require_field(const Json& record, const char* key, const std::string& context) {
  auto it = record.find(key);
  if (it == record.end()) {
    throw ParseError(context + ": missing field '" + key + "'", record.dump());
  }
  return *it;
}

std::string require_string(const Json& record, const char* key, const std::string& context) {
  const Json& value = require_field(record, key, context);
  if (!value.is_string()) {
    throw ParseError(context + ": field '" + key + "' must be a string", record.dump());
  }
  return value.get<std::string>();
}

std::int64_t require_int(const Json& record, const char* key, const std::string& context) {
  const Json& value = require_field(record, key, context);
  if (!value.is_number_integer()) {
    throw ParseError(context + ": field '" + key + "' must be an integer", record.dump());
  }
  return value.get<std::int64_t>();
}

double require_double(const Json& record, const char* key, const std::string& context) {
  const Json& value = require_field(record, key, context);
  if (!value.is_number()) {
    throw ParseError(context + ": field '" + key + "' must be a number", record.dump());
  }
  return value.get<double>();
}

}  // namespace posterkit::pipeline
