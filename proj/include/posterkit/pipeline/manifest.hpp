// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "posterkit/core/jsonl.hpp"

namespace posterkit::pipeline {

inline constexpr int kManifestVersion = 1;

// Schema identifiers of the JSONL files the stages exchange. Inputs the user
// prepares by hand use the same header convention as stage outputs.
namespace schema {
inline constexpr const char* kForge = "posterkit.forge-manifest";
inline constexpr const char* kPosters = "posterkit.poster-manifest";
inline constexpr const char* kCuration = "posterkit.curation-manifest";
inline constexpr const char* kCandidates = "posterkit.candidate-manifest";
inline constexpr const char* kPreferencePairs = "posterkit.preference-manifest";
inline constexpr const char* kReflectionSets = "posterkit.reflection-candidates";
inline constexpr const char* kReflectionPairs = "posterkit.reflection-manifest";
inline constexpr const char* kOcrSamples = "posterkit.ocr-samples";
inline constexpr const char* kOcrReport = "posterkit.ocr-report";
inline constexpr const char* kLossSamples = "posterkit.loss-samples";
inline constexpr const char* kLossReport = "posterkit.loss-report";
}  // namespace schema

Json manifest_header(const std::string& schema_name);

// Reads a JSONL manifest and checks its header against the expected schema
// name and the supported version. Parse and validation problems raise
// ParseError naming the file; a missing file raises IoError.
JsonlFile load_manifest(const std::filesystem::path& path, const std::string& expected_schema);

std::string serialize_manifest(const std::string& schema_name, const std::vector<Json>& records);

// Serializes, writes atomically, and returns the SHA-256 hex digest of the
// bytes on disk.
std::string write_manifest(const std::filesystem::path& path, const std::string& schema_name,
                           const std::vector<Json>& records);

// Strict field accessors for manifest records; failures raise ParseError
// naming the record context.
const Json& require_field(const Json& record, const char* key, const std::string& context);
std::string require_string(const Json& record, const char* key, const std::string& context);
std::int64_t require_int(const Json& record, const char* key, const std::string& context);
double require_double(const Json& record, const char* key, const std::string& context);

}  // namespace posterkit::pipeline
