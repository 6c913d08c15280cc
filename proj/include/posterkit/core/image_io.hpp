// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include "posterkit/core/image.hpp"

namespace posterkit {

// Decodes PNG or JPEG, dispatching on the file's magic bytes. Gray and
// gray+alpha decode to 1 channel, everything else to 3 (alpha is dropped).
ImageU8 read_image(const std::filesystem::path& path);

ImageU8 decode_image(const std::string& bytes, const std::string& name_for_errors);

// Encodes 1- or 3-channel rasters as 8-bit PNG.
std::string encode_png(const ImageU8& image);
void write_png(const std::filesystem::path& path, const ImageU8& image);

}  // namespace posterkit
