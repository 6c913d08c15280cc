// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace posterkit {

// Lowercase hex digests. MD5 is used for exact-duplicate content hashes,
// SHA-256 for content-addressed response cache keys.
std::string md5_hex(std::span<const std::uint8_t> bytes);
std::string md5_hex(std::string_view bytes);
std::string md5_file_hex(const std::filesystem::path& path);

std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_hex(std::string_view bytes);
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace posterkit
