// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
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

struct SetItem {
  pairs::CandidateSet set;
  std::string prompt;
  std::vector<std::filesystem::path> image_files;
};

struct SetResult {
  std::optional<pairs::PreferencePair> pair;
  std::string reason;
  std::string detail;
  std::string raw_ref;
};

}  // namespace

StageReport run_pairs_stage(const StageConfig& config) {
  const Json& params = config.params;
  check_param_keys(params, {"verdicts", "capture_dir"}, "pairs");

  const std::string verdicts = param_string(params, "verdicts", "", "pairs");
  if (verdicts.empty()) {
    throw ConfigError("pairs params: 'verdicts' is required ('vlm' or a directory)");
  }
  const bool use_vlm = verdicts == "vlm";
  const std::filesystem::path verdict_dir =
      use_vlm ? std::filesystem::path() : resolve_param_path(config, verdicts);

  const JsonlFile input = load_manifest(config.input_path, schema::kCandidates);

  std::vector<SetItem> sets;
  sets.reserve(input.records.size());
  std::set<std::string> seen_ids;
  for (std::size_t i = 0; i < input.records.size(); ++i) {
    const Json& record = input.records[i];
    const std::string context =
        config.input_path.string() + " record " + std::to_string(i + 1);
    SetItem item;
    item.set.prompt_id = require_string(record, "prompt_id", context);
    if (!seen_ids.insert(item.set.prompt_id).second) {
      throw ParseError(context + ": duplicate prompt_id '" + item.set.prompt_id + "'",
                       record.dump());
    }
    item.prompt = require_string(record, "prompt", context);
    const Json& candidates = require_field(record, "candidates", context);
    if (!candidates.is_array() || candidates.size() < 2) {
      throw ParseError(context + ": 'candidates' must list at least two entries",
                       record.dump());
    }
    for (const Json& candidate : candidates) {
      pairs::Candidate c;
      c.image_ref = require_string(candidate, "image", context);
      c.reward = require_double(candidate, "reward", context);
      if (!std::isfinite(c.reward)) {
        throw ParseError(context + ": non-finite reward", record.dump());
      }
      item.image_files.push_back(resolve_manifest_path(config.input_path, c.image_ref));
      item.set.candidates.push_back(std::move(c));
    }
    sets.push_back(std::move(item));
  }
  std::sort(sets.begin(), sets.end(), [](const SetItem& a, const SetItem& b) {
    return a.set.prompt_id < b.set.prompt_id;
  });

  std::unique_ptr<VlmClient> client;
  if (use_vlm) {
    const std::filesystem::path capture_dir = resolve_param_path(
        config, param_string(params, "capture_dir",
                             (config.output_path.parent_path() / "captures").string(),
                             "pairs"));
    client = make_vlm_client(config, capture_dir);
  }
  const PromptTemplate& verdict_template = TemplateCatalog::builtin().get("alignment_eval");

  std::vector<SetResult> results(sets.size());
  parallel_for(sets.size(), config.worker_count, [&](std::size_t i) {
    const SetItem& item = sets[i];
    SetResult& out = results[i];

    std::vector<double> rewards;
    rewards.reserve(item.set.candidates.size());
    for (const pairs::Candidate& c : item.set.candidates) {
      rewards.push_back(c.reward);
    }

    // The verdict judges the winner, so it is only fetched for sets that
    // survive the cheap gates.
    std::optional<pairs::AlignmentVerdict> verdict;
    std::string fetch_reason;
    const auto extremes = pairs::select_extremes(rewards);
    if (extremes &&
        rewards[extremes->winner] - rewards[extremes->loser] > pairs::kRewardGapThreshold) {
      std::string raw;
      bool have_raw = false;
      if (use_vlm) {
        std::string bytes;
        try {
          bytes = read_file(item.image_files[extremes->winner]);
        } catch (const std::exception& e) {
          fetch_reason = reason::kIo;
          out.detail = e.what();
        }
        if (fetch_reason.empty()) {
          const VlmRequest request{
              "alignment_eval",
              render_template(verdict_template, {{"original_prompt", item.prompt}}),
              {sha256_hex(bytes)}};
          VlmReply reply = client->complete(request);
          out.raw_ref = reply.cache_key;
          if (reply.ok()) {
            raw = std::move(reply.raw);
            have_raw = true;
          } else {
            fetch_reason = reply.error;
            out.detail = reply.detail;
          }
        }
      } else {
        const std::filesystem::path file = verdict_dir / (item.set.prompt_id + ".txt");
        if (auto text = try_read_file(file)) {
          raw = std::move(*text);
          have_raw = true;
          out.raw_ref = file.filename().string();
        }
      }
      if (have_raw) {
        try {
          verdict = pairs::parse_verdict(raw);
        } catch (const std::exception& e) {
          fetch_reason = reason::kParseError;
          out.detail = e.what();
        }
      }
    }

    const pairs::PairOutcome outcome = pairs::build_preference_pair(item.set, verdict);
    if (outcome.emitted()) {
      out.pair = outcome.pair;
    } else {
      // A failed fetch surfaces its own reason instead of the generic
      // missing-verdict gate.
      out.reason = (outcome.reject_reason == pairs::reject::kMissingVerdict &&
                    !fetch_reason.empty())
                       ? fetch_reason
                       : outcome.reject_reason;
    }
  });

  std::vector<Json> records;
  records.reserve(sets.size());
  StageReport report;
  report.stage = Stage::Pairs;
  report.input_count = sets.size();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const SetResult& result = results[i];
    Json record;
    record["prompt_id"] = sets[i].set.prompt_id;
    if (result.pair) {
      record["status"] = "pair";
      record["winner"] = result.pair->winner;
      record["loser"] = result.pair->loser;
      record["reward_gap"] = result.pair->reward_gap;
      record["verdict"] =
          result.pair->alignment_verdict == pairs::AlignmentVerdict::Pass ? "pass" : "fail";
      report.accepted += 1;
    } else {
      record["status"] = "rejected";
      record["reason"] = result.reason;
      if (!result.detail.empty()) {
        record["detail"] = result.detail;
      }
      report.rejections[result.reason] += 1;
    }
    if (!result.raw_ref.empty()) {
      record["raw_ref"] = result.raw_ref;
    }
    records.push_back(std::move(record));
  }

  report.output_path = config.output_path;
  report.manifest_digest = write_manifest(config.output_path, schema::kPreferencePairs, records);
  return report;
}

}  // namespace posterkit::pipeline
