// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "posterkit/core/digest.hpp"
#include "posterkit/core/errors.hpp"
#include "posterkit/core/fsutil.hpp"
#include "posterkit/core/parallel.hpp"
#include "posterkit/pairs/builder.hpp"
#include "posterkit/pipeline/manifest.hpp"
#include "posterkit/pipeline/stage.hpp"
#include "posterkit/pipeline/templates.hpp"

#include "stage_util.hpp"

namespace posterkit::pipeline {

namespace {

// A selection response that names no winner discards the whole set; a missing
// sidecar selection file is a distinct failure.
constexpr const char* kBestNone = "best_none";
constexpr const char* kMissingSelection = "missing_selection";

struct SetInput {
  std::string prompt_id;
  std::string prompt;
  std::array<std::string, pairs::kReflectionSetSize> candidates;
  std::array<std::filesystem::path, pairs::kReflectionSetSize> image_files;
};

struct SetResult {
  pairs::ReflectionSet built;
  bool failed = false;      // set-level failure before pair building
  std::string reason;       // set-level reason (failure or best_none)
  std::string detail;
  std::string raw_ref;      // selection response reference
  // Per-source fetch failures, keyed by candidate index; these replace the
  // generic missing-feedback drop reason in the output.
  std::map<int, std::pair<std::string, std::string>> feedback_errors;
};

}  // namespace

StageReport run_reflect_stage(const StageConfig& config) {
  const Json& params = config.params;
  check_param_keys(params, {"responses", "capture_dir"}, "reflect");

  const std::string responses = param_string(params, "responses", "", "reflect");
  if (responses.empty()) {
    throw ConfigError("reflect params: 'responses' is required ('vlm' or a directory)");
  }
  const bool use_vlm = responses == "vlm";
  const std::filesystem::path response_dir =
      use_vlm ? std::filesystem::path() : resolve_param_path(config, responses);

  const JsonlFile input = load_manifest(config.input_path, schema::kReflectionSets);

  std::vector<SetInput> sets;
  sets.reserve(input.records.size());
  std::set<std::string> seen_ids;
  for (std::size_t i = 0; i < input.records.size(); ++i) {
    const Json& record = input.records[i];
    const std::string context =
        config.input_path.string() + " record " + std::to_string(i + 1);
    SetInput item;
    item.prompt_id = require_string(record, "prompt_id", context);
    if (!seen_ids.insert(item.prompt_id).second) {
      throw ParseError(context + ": duplicate prompt_id '" + item.prompt_id + "'",
                       record.dump());
    }
    item.prompt = require_string(record, "prompt", context);
    const Json& candidates = require_field(record, "candidates", context);
    if (!candidates.is_array() ||
        candidates.size() != static_cast<std::size_t>(pairs::kReflectionSetSize)) {
      throw ParseError(context + ": 'candidates' must list exactly " +
                           std::to_string(pairs::kReflectionSetSize) + " entries",
                       record.dump());
    }
    for (int k = 0; k < pairs::kReflectionSetSize; ++k) {
      if (!candidates[k].is_string() || candidates[k].get<std::string>().empty()) {
        throw ParseError(context + ": candidate entries must be non-empty strings",
                         record.dump());
      }
      item.candidates[k] = candidates[k].get<std::string>();
      item.image_files[k] = resolve_manifest_path(config.input_path, item.candidates[k]);
    }
    sets.push_back(std::move(item));
  }
  std::sort(sets.begin(), sets.end(), [](const SetInput& a, const SetInput& b) {
    return a.prompt_id < b.prompt_id;
  });

  std::unique_ptr<VlmClient> client;
  if (use_vlm) {
    const std::filesystem::path capture_dir = resolve_param_path(
        config, param_string(params, "capture_dir",
                             (config.output_path.parent_path() / "captures").string(),
                             "reflect"));
    client = make_vlm_client(config, capture_dir);
  }
  const TemplateCatalog& catalog = TemplateCatalog::builtin();
  const PromptTemplate& selection_template = catalog.get("best_of_six");
  const PromptTemplate& feedback_template = catalog.get("feedback_collection");
  const std::string feedback_prompt = render_template(feedback_template, {});

  std::vector<SetResult> results(sets.size());
  parallel_for(sets.size(), config.worker_count, [&](std::size_t i) {
    const SetInput& item = sets[i];
    SetResult& out = results[i];

    std::array<std::string, pairs::kReflectionSetSize> digests;
    if (use_vlm) {
      for (int k = 0; k < pairs::kReflectionSetSize; ++k) {
        try {
          digests[k] = sha256_hex(read_file(item.image_files[k]));
        } catch (const std::exception& e) {
          out.failed = true;
          out.reason = reason::kIo;
          out.detail = e.what();
          return;
        }
      }
    }

    // Selection step: which of the six candidates is best, if any.
    std::string selection_raw;
    if (use_vlm) {
      VlmRequest request;
      request.template_id = "best_of_six";
      request.rendered_prompt =
          render_template(selection_template, {{"original_prompt", item.prompt}});
      request.attachment_digests.assign(digests.begin(), digests.end());
      VlmReply reply = client->complete(request);
      out.raw_ref = reply.cache_key;
      if (!reply.ok()) {
        out.failed = true;
        out.reason = reply.error;
        out.detail = reply.detail;
        return;
      }
      selection_raw = std::move(reply.raw);
    } else {
      const std::filesystem::path file = response_dir / (item.prompt_id + ".best.txt");
      auto text = try_read_file(file);
      if (!text) {
        out.failed = true;
        out.reason = kMissingSelection;
        return;
      }
      selection_raw = std::move(*text);
      out.raw_ref = file.filename().string();
    }

    std::optional<int> best_index;
    try {
      best_index = pairs::parse_best_of_six(selection_raw);
    } catch (const std::exception& e) {
      out.failed = true;
      out.reason = reason::kParseError;
      out.detail = e.what();
      return;
    }

    const pairs::FeedbackLookup lookup = [&](int source) -> std::optional<std::string> {
      if (use_vlm) {
        VlmRequest request;
        request.template_id = "feedback_collection";
        request.rendered_prompt = feedback_prompt;
        request.attachment_digests = {digests[source], digests[*best_index]};
        VlmReply reply = client->complete(request);
        if (!reply.ok()) {
          out.feedback_errors[source] = {reply.error, reply.detail};
          return std::nullopt;
        }
        return std::move(reply.raw);
      }
      const std::filesystem::path file =
          response_dir / (item.prompt_id + ".feedback." + std::to_string(source) + ".txt");
      return try_read_file(file);
    };

    out.built = pairs::build_reflection_pairs(item.prompt_id, item.candidates,
                                              best_index, lookup);
    if (out.built.discarded) {
      out.reason = kBestNone;
    }
  });

  std::vector<Json> records;
  records.reserve(sets.size());
  StageReport report;
  report.stage = Stage::Reflect;
  report.input_count = sets.size();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const SetInput& item = sets[i];
    const SetResult& result = results[i];
    Json record;
    record["prompt_id"] = item.prompt_id;
    if (result.failed) {
      record["status"] = "rejected";
      record["reason"] = result.reason;
      if (!result.detail.empty()) {
        record["detail"] = result.detail;
      }
      report.rejections[result.reason] += 1;
    } else if (result.built.discarded) {
      record["status"] = "discarded";
      record["reason"] = kBestNone;
      report.rejections[kBestNone] += 1;
    } else {
      record["status"] = "pairs";
      record["best_index"] = *result.built.best_index;
      Json pairs_json = Json::array();
      for (const pairs::ReflectionPair& p : result.built.pairs) {
        pairs_json.push_back({{"source", p.source},
                              {"target", p.target},
                              {"feedback_content", p.feedback_content},
                              {"feedback_style", p.feedback_style}});
      }
      record["pairs"] = std::move(pairs_json);
      Json dropped_json = Json::array();
      for (const pairs::DroppedPair& d : result.built.dropped) {
        std::string drop_reason = d.reason;
        // A fetch failure is more specific than the generic missing-feedback
        // drop the builder records.
        if (d.reason == pairs::reject::kMissingFeedback) {
          for (int k = 0; k < pairs::kReflectionSetSize; ++k) {
            if (item.candidates[k] == d.source) {
              auto it = result.feedback_errors.find(k);
              if (it != result.feedback_errors.end()) {
                drop_reason = it->second.first;
              }
              break;
            }
          }
        }
        dropped_json.push_back({{"source", d.source}, {"reason", drop_reason}});
        report.rejections[drop_reason] += 1;
      }
      record["dropped"] = std::move(dropped_json);
      report.accepted += result.built.pairs.size();
    }
    if (!result.raw_ref.empty()) {
      record["raw_ref"] = result.raw_ref;
    }
    records.push_back(std::move(record));
  }

  report.output_path = config.output_path;
  report.manifest_digest = write_manifest(config.output_path, schema::kReflectionPairs, records);
  return report;
}

}  // namespace posterkit::pipeline
