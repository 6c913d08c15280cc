// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/forge/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/image_io.hpp"
#include "posterkit/forge/content.hpp"
#include "posterkit/forge/layout.hpp"
#include "posterkit/forge/prompt.hpp"
#include "posterkit/forge/render.hpp"

namespace posterkit::forge {
namespace {

bool has_image_extension(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

ImageU8 procedural_background(std::uint64_t seed, int width, int height) {
  Rng rng(seed);
  ImageU8 img(width, height, 3);

  // Diagonal gradient between two random colors.
  std::array<double, 3> c0, c1;
  for (int ch = 0; ch < 3; ++ch) {
    c0[static_cast<std::size_t>(ch)] = 28.0 + rng.uniform() * 200.0;
    c1[static_cast<std::size_t>(ch)] = 28.0 + rng.uniform() * 200.0;
  }
  const double axis = rng.uniform();  // 0 = vertical sweep, 1 = horizontal
  for (int y = 0; y < height; ++y) {
    const double ty = height > 1 ? static_cast<double>(y) / (height - 1) : 0.0;
    for (int x = 0; x < width; ++x) {
      const double tx = width > 1 ? static_cast<double>(x) / (width - 1) : 0.0;
      const double t = axis * tx + (1.0 - axis) * ty;
      std::uint8_t* px = img.pixel(x, y);
      for (int ch = 0; ch < 3; ++ch) {
        const auto i = static_cast<std::size_t>(ch);
        px[ch] = static_cast<std::uint8_t>(
            std::lround(c0[i] + (c1[i] - c0[i]) * t));
      }
    }
  }

  // A few soft blobs for texture.
  const int blobs = 2 + static_cast<int>(rng.uniform_int(4));
  for (int b = 0; b < blobs; ++b) {
    const double cx = rng.uniform() * width;
    const double cy = rng.uniform() * height;
    const double radius = rng.uniform(0.05, 0.2) * std::min(width, height);
    const double strength = rng.uniform(0.3, 0.7);
    std::array<double, 3> color;
    for (int ch = 0; ch < 3; ++ch) {
      color[static_cast<std::size_t>(ch)] = 28.0 + rng.uniform() * 200.0;
    }
    const int x0 = std::max(0, static_cast<int>(std::floor(cx - radius)));
    const int x1 = std::min(width, static_cast<int>(std::ceil(cx + radius)) + 1);
    const int y0 = std::max(0, static_cast<int>(std::floor(cy - radius)));
    const int y1 =
        std::min(height, static_cast<int>(std::ceil(cy + radius)) + 1);
    const double r2 = radius * radius;
    for (int y = y0; y < y1; ++y) {
      for (int x = x0; x < x1; ++x) {
        const double dx = x + 0.5 - cx;
        const double dy = y + 0.5 - cy;
        const double d2 = dx * dx + dy * dy;
        if (d2 >= r2) {
          continue;
        }
        const double w = strength * (1.0 - d2 / r2);
        std::uint8_t* px = img.pixel(x, y);
        for (int ch = 0; ch < 3; ++ch) {
          const auto i = static_cast<std::size_t>(ch);
          px[ch] = static_cast<std::uint8_t>(
              std::lround(px[ch] * (1.0 - w) + color[i] * w));
        }
      }
    }
  }
  return img;
}

}  // namespace

BackgroundProvider BackgroundProvider::directory(
    const std::filesystem::path& dir) {
  BackgroundProvider p;
  p.procedural_ = false;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && has_image_extension(entry.path())) {
      p.files_.push_back(entry.path());
    }
  }
  std::sort(p.files_.begin(), p.files_.end());
  if (p.files_.empty()) {
    throw ConfigError("backgrounds: no images in " + dir.string());
  }
  return p;
}

BackgroundProvider BackgroundProvider::procedural() {
  return BackgroundProvider{};
}

Background BackgroundProvider::fetch(Rng& rng, int width, int height) const {
  if (procedural_) {
    const std::uint64_t seed = rng.next_u64();
    char id[32];
    std::snprintf(id, sizeof id, "proc-%016llx",
                  static_cast<unsigned long long>(seed));
    return {id, procedural_background(seed, width, height)};
  }
  const auto& path = files_[rng.uniform_int(files_.size())];
  return {path.stem().string(), read_image(path)};
}

ForgeEngine::ForgeEngine(GenerationConfig config, Vocabulary vocab,
                         FontLibrary fonts, BackgroundProvider backgrounds)
    : config_(std::move(config)),
      vocab_(std::move(vocab)),
      fonts_(std::move(fonts)),
      backgrounds_(std::move(backgrounds)) {
  config_.validate();
  vocab_.validate();
  if (fonts_.fonts().empty()) {
    throw ConfigError("forge engine: empty font library");
  }
}

ForgeSample ForgeEngine::generate_sample(std::uint64_t index) const {
  const std::uint64_t seed = derive_seed(config_.master_seed, index);
  Rng rng(seed);

  Background background =
      backgrounds_.fetch(rng, config_.canvas_width, config_.canvas_height);

  const int count =
      1 + static_cast<int>(rng.pick_weighted(config_.instance_count_weights));
  std::vector<TextInstanceSpec> specs;
  for (int i = 0; i < count; ++i) {
    TextInstanceSpec spec;
    spec.content = generate_text_content(rng, config_, vocab_);
    const FontClass cls = rng.bernoulli(config_.stylized_font_fraction)
                              ? FontClass::Stylized
                              : FontClass::Classic;
    const FontInfo* font = fonts_.select(cls, spec.content, rng);
    if (!font) {
      continue;  // no font covers this content; skip the instance
    }
    spec.font_id = font->id;
    spec.font_class = font->font_class;
    spec.color_index = static_cast<int>(rng.uniform_int(kPalette.size()));
    for (int ch = 0; ch < 3; ++ch) {
      const auto i_ch = static_cast<std::size_t>(ch);
      const int base = kPalette[static_cast<std::size_t>(spec.color_index)]
                           .rgb[i_ch];
      const int jittered =
          base + static_cast<int>(rng.range_int(-config_.color_jitter,
                                                config_.color_jitter));
      spec.rgb[i_ch] =
          static_cast<std::uint8_t>(std::clamp(jittered, 0, 255));
    }
    spec.orientation = static_cast<Orientation>(
        rng.pick_weighted(config_.orientation_weights));
    spec.alignment = static_cast<Alignment>(rng.uniform_int(3));
    spec.rotation_deg = 0.0;
    if (spec.orientation == Orientation::Horizontal &&
        rng.bernoulli(config_.rotation_probability)) {
      spec.rotation_deg =
          rng.uniform(config_.rotation_min_deg, config_.rotation_max_deg);
    }
    spec.cell = {static_cast<int>(rng.uniform_int(3)),
                 static_cast<int>(rng.uniform_int(3))};
    spec.font_size_px = static_cast<int>(
        rng.range_int(config_.font_size_min_px, config_.font_size_max_px));
    spec.mention_font = rng.bernoulli(config_.font_mention_probability);
    specs.push_back(std::move(spec));
  }

  ForgeSample sample;
  sample.seed = seed;
  sample.background_id = background.id;
  sample.requested_count = count;
  if (!specs.empty()) {
    sample.instances = plan_layout(specs, fonts_, rng, config_);
  }
  sample.image =
      render_sample(background.image, sample.instances, fonts_, config_);
  sample.prompt = synthesize_prompt(sample.instances);
  return sample;
}

Json ForgeEngine::manifest_record(const ForgeSample& sample,
                                  const std::string& id) const {
  Json record;
  record["id"] = id;
  record["background_id"] = sample.background_id;
  record["seed"] = sample.seed;
  record["prompt"] = sample.prompt;
  Json instances = Json::array();
  for (const PlacedInstance& inst : sample.instances) {
    instances.push_back({
        {"content", inst.spec.content},
        {"box", {inst.box.x0, inst.box.y0, inst.box.x1, inst.box.y1}},
        {"orientation", orientation_name(inst.spec.orientation)},
        {"color",
         kPalette[static_cast<std::size_t>(inst.spec.color_index)].name},
        {"font_id", inst.spec.font_id},
    });
  }
  record["instances"] = std::move(instances);
  return record;
}

}  // namespace posterkit::forge
