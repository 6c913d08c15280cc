// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "posterkit/core/image.hpp"
#include "posterkit/forge/config.hpp"
#include "posterkit/forge/font.hpp"
#include "posterkit/forge/types.hpp"

namespace posterkit::forge {

// Composites placed text onto the background and returns the RGB canvas.
// Backgrounds larger than the canvas are center-cropped; smaller ones raise
// ConfigError. Painting is clipped to each instance's box, so every pixel
// outside all boxes is bitwise identical to the (cropped) background.
ImageU8 render_sample(const ImageU8& background,
                      std::span<const PlacedInstance> placements,
                      const FontLibrary& fonts, const GenerationConfig& config);

}  // namespace posterkit::forge
