// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/loss/tensor_io.hpp"

#include <cstring>
#include <limits>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/fsutil.hpp"

namespace posterkit::loss {
namespace {

constexpr char kMagic[4] = {'T', 'N', 'S', 'R'};
constexpr std::uint32_t kMaxRank = 8;

void append_u32_le(std::string& out, std::uint32_t value) {
  out.push_back(static_cast<char>(value & 0xFF));
  out.push_back(static_cast<char>((value >> 8) & 0xFF));
  out.push_back(static_cast<char>((value >> 16) & 0xFF));
  out.push_back(static_cast<char>((value >> 24) & 0xFF));
}

std::uint32_t load_u32_le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

}  // namespace

std::size_t Tensor::element_count() const {
  std::size_t n = 1;
  for (std::uint32_t d : shape) {
    n *= d;
  }
  return n;
}

Eigen::ArrayXd Tensor::flat() const {
  Eigen::ArrayXd out(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[static_cast<Eigen::Index>(i)] = values[i];
  }
  return out;
}

Tensor Tensor::from_flat(const Eigen::ArrayXd& values, std::vector<std::uint32_t> shape) {
  Tensor t;
  if (shape.empty()) {
    shape.push_back(static_cast<std::uint32_t>(values.size()));
  }
  t.shape = std::move(shape);
  t.values.resize(static_cast<std::size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    t.values[static_cast<std::size_t>(i)] = static_cast<float>(values[i]);
  }
  if (t.element_count() != t.values.size()) {
    throw IoError("tensor shape does not match value count");
  }
  return t;
}

std::string encode_tensor(const Tensor& tensor) {
  if (tensor.shape.empty() || tensor.shape.size() > kMaxRank) {
    throw IoError("tensor rank must be in [1, " + std::to_string(kMaxRank) + "]");
  }
  if (tensor.element_count() != tensor.values.size()) {
    throw IoError("tensor shape does not match value count");
  }
  std::string out;
  out.reserve(8 + 4 * tensor.shape.size() + 4 * tensor.values.size());
  out.append(kMagic, 4);
  append_u32_le(out, static_cast<std::uint32_t>(tensor.shape.size()));
  for (std::uint32_t d : tensor.shape) {
    append_u32_le(out, d);
  }
  for (float v : tensor.values) {
    std::uint32_t bits;
    static_assert(sizeof(bits) == sizeof(v));
    std::memcpy(&bits, &v, sizeof(bits));
    append_u32_le(out, bits);
  }
  return out;
}

Tensor decode_tensor(const std::string& bytes, const std::string& name_for_errors) {
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw ParseError("not a tensor file: " + name_for_errors, bytes.substr(0, 16));
  }
  const std::uint32_t rank = load_u32_le(p + 4);
  if (rank == 0 || rank > kMaxRank) {
    throw ParseError("bad tensor rank in " + name_for_errors, std::to_string(rank));
  }
  const std::size_t header_size = 8 + 4 * static_cast<std::size_t>(rank);
  if (bytes.size() < header_size) {
    throw ParseError("truncated tensor header in " + name_for_errors, "");
  }
  Tensor t;
  t.shape.resize(rank);
  std::size_t count = 1;
  for (std::uint32_t i = 0; i < rank; ++i) {
    t.shape[i] = load_u32_le(p + 8 + 4 * static_cast<std::size_t>(i));
    if (t.shape[i] != 0 && count > std::numeric_limits<std::size_t>::max() / t.shape[i]) {
      throw ParseError("tensor too large in " + name_for_errors, "");
    }
    count *= t.shape[i];
  }
  if (bytes.size() != header_size + 4 * count) {
    throw ParseError("tensor payload size mismatch in " + name_for_errors,
                     "expected " + std::to_string(header_size + 4 * count) + " bytes, have " +
                         std::to_string(bytes.size()));
  }
  t.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t bits = load_u32_le(p + header_size + 4 * i);
    float v;
    std::memcpy(&v, &bits, sizeof(v));
    t.values[i] = v;
  }
  return t;
}

Tensor read_tensor(const std::filesystem::path& path) {
  return decode_tensor(read_file(path), path.string());
}

void write_tensor(const std::filesystem::path& path, const Tensor& tensor) {
  write_file_atomic(path, encode_tensor(tensor));
}

}  // namespace posterkit::loss
