// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "posterkit/core/rng.hpp"
#include "posterkit/forge/config.hpp"
#include "posterkit/forge/vocabulary.hpp"

namespace posterkit::forge {

// Draws one text payload. With probability alphanumeric_fraction the result
// is a random [A-Za-z0-9] string of length 3 to 12; otherwise a short phrase
// is built from the vocabulary with varied casing and optional trailing
// punctuation. Output is always drawable by the builtin glyph set and never
// contains a double quote.
std::string generate_text_content(Rng& rng, const GenerationConfig& config,
                                  const Vocabulary& vocab);

}  // namespace posterkit::forge
