// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/core/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>

#include "posterkit/core/errors.hpp"

namespace posterkit {

namespace {

using EvpCtx = std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)>;

std::string to_hex(std::span<const unsigned char> digest) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(digest.size() * 2);
  for (unsigned char b : digest) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0x0F]);
  }
  return out;
}

std::string digest_bytes(const EVP_MD* md, std::span<const std::uint8_t> bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, md, nullptr) != 1) {
    throw IoError("digest computation failed");
  }
  return to_hex({digest.data(), len});
}

std::string digest_file(const EVP_MD* md, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for hashing: " + path.string());

  EvpCtx ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), md, nullptr) != 1) {
    throw IoError("digest init failed");
  }
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    const auto got = in.gcount();
    if (got > 0 &&
        EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(got)) != 1) {
      throw IoError("digest update failed");
    }
  }
  if (in.bad()) throw IoError("read error while hashing: " + path.string());

  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
    throw IoError("digest final failed");
  }
  return to_hex({digest.data(), len});
}

std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace

std::string md5_hex(std::span<const std::uint8_t> bytes) {
  return digest_bytes(EVP_md5(), bytes);
}
std::string md5_hex(std::string_view bytes) { return md5_hex(as_bytes(bytes)); }
std::string md5_file_hex(const std::filesystem::path& path) {
  return digest_file(EVP_md5(), path);
}

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
  return digest_bytes(EVP_sha256(), bytes);
}
std::string sha256_hex(std::string_view bytes) { return sha256_hex(as_bytes(bytes)); }
std::string sha256_file_hex(const std::filesystem::path& path) {
  return digest_file(EVP_sha256(), path);
}

}  // namespace posterkit
