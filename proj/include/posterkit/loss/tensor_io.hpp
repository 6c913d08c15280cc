// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace posterkit::loss {

// Flat binary tensor: magic "TNSR", uint32 rank, uint32 per dimension, then
// row-major float32 values. All integers and floats are little endian.
struct Tensor {
  std::vector<std::uint32_t> shape;
  std::vector<float> values;

  std::size_t element_count() const;
  Eigen::ArrayXd flat() const;

  static Tensor from_flat(const Eigen::ArrayXd& values,
                          std::vector<std::uint32_t> shape = {});
};

std::string encode_tensor(const Tensor& tensor);
Tensor decode_tensor(const std::string& bytes, const std::string& name_for_errors);

Tensor read_tensor(const std::filesystem::path& path);
void write_tensor(const std::filesystem::path& path, const Tensor& tensor);

}  // namespace posterkit::loss
