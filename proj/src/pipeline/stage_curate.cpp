// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "posterkit/core/digest.hpp"
#include "posterkit/core/errors.hpp"
#include "posterkit/core/fsutil.hpp"
#include "posterkit/core/image_io.hpp"
#include "posterkit/core/parallel.hpp"
#include "posterkit/curation/dedup.hpp"
#include "posterkit/curation/masks.hpp"
#include "posterkit/curation/phash.hpp"
#include "posterkit/curation/scorer.hpp"
#include "posterkit/curation/types.hpp"
#include "posterkit/pipeline/manifest.hpp"
#include "posterkit/pipeline/stage.hpp"
#include "posterkit/pipeline/templates.hpp"

#include "stage_util.hpp"

namespace posterkit::pipeline {

namespace {

namespace cur = posterkit::curation;

struct ScoreEntry {
  std::optional<std::pair<double, double>> logits;
  std::optional<double> hps;
};

std::map<std::string, ScoreEntry> load_scores(const std::filesystem::path& path) {
  std::map<std::string, ScoreEntry> scores;
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    const std::string context = path.string() + ":" + std::to_string(line_no);
    const Json doc = parse_json(line, context);
    if (!doc.is_object()) {
      throw ParseError(context + ": score line must be an object", line);
    }
    if (doc.contains("schema")) {
      continue;  // optional header line
    }
    const std::string id = require_string(doc, "id", context);
    ScoreEntry entry;
    if (doc.contains("logits")) {
      const Json& logits = doc["logits"];
      if (!logits.is_array() || logits.size() != 2 || !logits[0].is_number() ||
          !logits[1].is_number()) {
        throw ParseError(context + ": 'logits' must be [a, b]", line);
      }
      const double a = logits[0].get<double>();
      const double b = logits[1].get<double>();
      if (std::isnan(a) || std::isnan(b)) {
        throw ParseError(context + ": NaN logit", line);
      }
      entry.logits = {a, b};
    }
    if (doc.contains("hps")) {
      if (!doc["hps"].is_number()) {
        throw ParseError(context + ": 'hps' must be a number", line);
      }
      entry.hps = doc["hps"].get<double>();
    }
    scores[id] = entry;
  }
  return scores;
}

std::map<std::string, std::string> load_response_sidecar(const std::filesystem::path& path) {
  std::map<std::string, std::string> responses;
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    const std::string context = path.string() + ":" + std::to_string(line_no);
    const Json doc = parse_json(line, context);
    if (doc.contains("schema")) {
      continue;
    }
    responses[require_string(doc, "id", context)] = require_string(doc, "response", context);
  }
  return responses;
}

enum class MaskSource { None, Vlm, Sidecar };

struct Item {
  std::string id;
  std::filesystem::path image_file;
  std::string caption;
  bool has_caption = false;

  bool io_ok = false;
  std::string detail;      // io or client specifics
  std::string raw_ref;     // capture key or sidecar reference for parse errors
  std::string content_hash;
  std::string sha256;
  std::uint64_t phash = 0;
  int width = 0;
  int height = 0;

  std::optional<double> binary_score;
  std::optional<double> hps_score;
  std::vector<cur::TextRegionMask> masks;
  bool masks_present = false;
  std::string weight_map;

  bool rejected = false;
  std::string reason;

  void reject(const std::string& why) {
    rejected = true;
    reason = why;
  }
};

std::string phash_hex(std::uint64_t value) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace

StageReport run_curate_stage(const StageConfig& config) {
  const Json& params = config.params;
  check_param_keys(params,
                   {"scores", "binary_threshold", "hps_threshold", "near_threshold",
                    "major_fraction", "masks", "weight_maps", "capture_dir"},
                   "curate");

  const double binary_threshold =
      param_double(params, "binary_threshold", cur::kBinaryThreshold, "curate");
  const double hps_threshold = param_double(params, "hps_threshold", cur::kHpsThreshold, "curate");
  const int near_threshold = static_cast<int>(
      param_int(params, "near_threshold", cur::kNearDuplicateThreshold, "curate"));
  const double major_fraction =
      param_double(params, "major_fraction", cur::kMajorFractionThreshold, "curate");
  if (near_threshold < 0) {
    throw ConfigError("curate params: 'near_threshold' must be >= 0");
  }
  if (!(major_fraction >= 0.0 && major_fraction <= 1.0)) {
    throw ConfigError("curate params: 'major_fraction' must lie in [0, 1]");
  }

  const JsonlFile input = load_manifest(config.input_path, schema::kPosters);

  std::vector<Item> items;
  items.reserve(input.records.size());
  std::set<std::string> ids;
  for (std::size_t i = 0; i < input.records.size(); ++i) {
    const Json& record = input.records[i];
    const std::string context =
        config.input_path.string() + " record " + std::to_string(i + 1);
    Item item;
    item.id = require_string(record, "id", context);
    if (item.id.empty()) {
      throw ParseError(context + ": empty id", record.dump());
    }
    if (!ids.insert(item.id).second) {
      throw ParseError(context + ": duplicate id '" + item.id + "'", record.dump());
    }
    item.image_file =
        resolve_manifest_path(config.input_path, require_string(record, "image", context));
    if (record.contains("caption")) {
      item.caption = require_string(record, "caption", context);
      item.has_caption = true;
    }
    items.push_back(std::move(item));
  }
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.id < b.id; });

  std::map<std::string, ScoreEntry> scores;
  if (params.contains("scores")) {
    scores = load_scores(resolve_param_path(config, param_string(params, "scores", "", "curate")));
  }

  const std::string mask_param = param_string(params, "masks", "none", "curate");
  MaskSource mask_source = MaskSource::None;
  std::map<std::string, std::string> mask_sidecar;
  if (mask_param == "vlm") {
    mask_source = MaskSource::Vlm;
  } else if (mask_param != "none") {
    mask_source = MaskSource::Sidecar;
    mask_sidecar = load_response_sidecar(resolve_param_path(config, mask_param));
  }

  const std::string weight_maps_raw = param_string(params, "weight_maps", "", "curate");
  const std::filesystem::path weight_maps_dir =
      weight_maps_raw.empty() ? std::filesystem::path()
                              : resolve_param_path(config, weight_maps_raw);

  std::unique_ptr<VlmClient> client;
  std::string mask_prompt;
  if (mask_source == MaskSource::Vlm) {
    const std::filesystem::path capture_dir = resolve_param_path(
        config, param_string(params, "capture_dir",
                             (config.output_path.parent_path() / "captures").string(),
                             "curate"));
    client = make_vlm_client(config, capture_dir);
    const auto& tpl = TemplateCatalog::builtin().get("gemini_mask");
    mask_prompt = render_template(tpl, {});
  }

  // Hash and fingerprint every poster up front; later gates only look at
  // these digests.
  parallel_for(items.size(), config.worker_count, [&](std::size_t i) {
    Item& item = items[i];
    std::string bytes;
    try {
      bytes = read_file(item.image_file);
    } catch (const std::exception& e) {
      item.detail = e.what();
      return;
    }
    item.content_hash = md5_hex(bytes);
    item.sha256 = sha256_hex(bytes);
    try {
      const ImageU8 image = decode_image(bytes, item.image_file.string());
      item.width = image.width;
      item.height = image.height;
      item.phash = cur::dhash(image);
    } catch (const std::exception& e) {
      item.detail = e.what();
      item.content_hash.clear();
      return;
    }
    item.io_ok = true;
  });

  for (Item& item : items) {
    if (!item.io_ok) {
      item.reject(cur::reject::kIo);
    }
  }

  // Gate order is fixed: exact hash, binary score, perceptual hash, HPS.
  {
    std::vector<cur::ContentHashItem> alive;
    for (const Item& item : items) {
      if (!item.rejected) {
        alive.push_back({item.id, item.content_hash});
      }
    }
    for (const std::string& id : cur::exact_duplicate_ids(alive)) {
      auto it = std::find_if(items.begin(), items.end(),
                             [&](const Item& x) { return x.id == id; });
      it->reject(cur::reject::kDuplicateExact);
    }
  }

  for (Item& item : items) {
    if (item.rejected) {
      continue;
    }
    const auto score_it = scores.find(item.id);
    if (score_it == scores.end() || !score_it->second.logits) {
      item.reject(cur::reject::kMissingLogits);
      continue;
    }
    const auto [a, b] = *score_it->second.logits;
    item.binary_score = cur::score_binary(a, b);
    if (!cur::binary_accept(*item.binary_score, binary_threshold)) {
      item.reject(cur::reject::kLowBinaryScore);
    }
  }

  {
    std::vector<cur::PhashItem> alive;
    for (const Item& item : items) {
      if (!item.rejected) {
        alive.push_back({item.id, item.phash});
      }
    }
    for (const std::string& id : cur::near_duplicate_ids(alive, near_threshold)) {
      auto it = std::find_if(items.begin(), items.end(),
                             [&](const Item& x) { return x.id == id; });
      it->reject(cur::reject::kDuplicateNear);
    }
  }

  for (Item& item : items) {
    if (item.rejected) {
      continue;
    }
    const auto score_it = scores.find(item.id);
    if (score_it == scores.end() || !score_it->second.hps) {
      item.reject(cur::reject::kMissingScore);
      continue;
    }
    item.hps_score = *score_it->second.hps;
    if (!cur::hps_keep(*item.hps_score, hps_threshold)) {
      item.reject(cur::reject::kLowHps);
    }
  }

  // Annotate the survivors with text-region masks and weight maps.
  if (mask_source != MaskSource::None) {
    if (!weight_maps_dir.empty()) {
      std::filesystem::create_directories(weight_maps_dir);
      write_file_atomic(weight_maps_dir / "weights.json",
                        cur::weight_map_sidecar().dump(2) + "\n");
    }
    parallel_for(items.size(), config.worker_count, [&](std::size_t i) {
      Item& item = items[i];
      if (item.rejected) {
        return;
      }
      std::string raw;
      if (mask_source == MaskSource::Sidecar) {
        const auto it = mask_sidecar.find(item.id);
        if (it == mask_sidecar.end()) {
          item.reject("missing_masks");
          return;
        }
        raw = it->second;
        item.raw_ref = "sidecar:" + item.id;
      } else {
        const VlmRequest request{"gemini_mask", mask_prompt, {item.sha256}};
        VlmReply reply = client->complete(request);
        if (!reply.ok()) {
          item.detail = reply.detail;
          item.raw_ref = reply.cache_key;
          item.reject(reply.error);
          return;
        }
        raw = std::move(reply.raw);
        item.raw_ref = reply.cache_key;
      }
      try {
        for (const auto& box : cur::parse_text_regions(raw)) {
          item.masks.push_back(cur::classify_mask(box, major_fraction));
        }
        item.masks_present = true;
      } catch (const std::exception& e) {
        item.detail = e.what();
        item.reject(reason::kParseError);
        return;
      }
      if (!weight_maps_dir.empty()) {
        const auto grid = cur::rasterize_weight_map(item.masks, item.width, item.height);
        const std::filesystem::path file = weight_maps_dir / (item.id + ".png");
        write_png(file, cur::weight_map_to_image(grid));
        item.weight_map = manifest_relative(file, config.output_path);
      }
    });
  }

  std::vector<Json> records;
  records.reserve(items.size());
  StageReport report;
  report.stage = Stage::Curate;
  report.input_count = items.size();
  for (const Item& item : items) {
    Json record;
    record["id"] = item.id;
    record["status"] = item.rejected ? "rejected" : "accepted";
    if (item.rejected) {
      record["reason"] = item.reason;
      if (!item.detail.empty()) {
        record["detail"] = item.detail;
      }
      if (!item.raw_ref.empty()) {
        record["raw_ref"] = item.raw_ref;
      }
      report.rejections[item.reason] += 1;
    } else {
      report.accepted += 1;
    }
    if (!item.content_hash.empty()) {
      record["content_hash"] = item.content_hash;
      record["phash"] = phash_hex(item.phash);
    }
    if (item.binary_score) {
      record["binary_score"] = *item.binary_score;
    }
    if (item.hps_score) {
      record["hps_score"] = *item.hps_score;
    }
    if (item.has_caption) {
      record["caption"] = item.caption;
    }
    if (item.masks_present) {
      Json masks = Json::array();
      for (const cur::TextRegionMask& mask : item.masks) {
        Json m;
        m["box_2d"] = mask.box_2d;
        m["size_class"] = mask.size_class == cur::SizeClass::Major ? "major" : "minor";
        m["area_fraction"] = mask.area_fraction;
        masks.push_back(std::move(m));
      }
      record["masks"] = std::move(masks);
      if (!item.weight_map.empty()) {
        record["weight_map"] = item.weight_map;
      }
    }
    records.push_back(std::move(record));
  }

  report.output_path = config.output_path;
  report.manifest_digest = write_manifest(config.output_path, schema::kCuration, records);
  return report;
}

}  // namespace posterkit::pipeline
