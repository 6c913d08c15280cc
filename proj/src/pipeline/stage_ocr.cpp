// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/parallel.hpp"
#include "posterkit/ocr/align.hpp"
#include "posterkit/ocr/metrics.hpp"
#include "posterkit/ocr/normalize.hpp"
#include "posterkit/pipeline/manifest.hpp"
#include "posterkit/pipeline/stage.hpp"

#include "stage_util.hpp"

namespace posterkit::pipeline {

namespace {

struct Sample {
  std::string id;
  std::string gt_raw;
  std::string ocr_raw;
};

struct Scored {
  std::string gt_norm;
  std::string ocr_norm;
  ocr::AlignmentCounts counts;
  ocr::OcrMetrics metrics;
};

}  // namespace

StageReport run_ocr_eval_stage(const StageConfig& config) {
  check_param_keys(config.params, {}, "ocr-eval");

  const JsonlFile input = load_manifest(config.input_path, schema::kOcrSamples);

  std::vector<Sample> samples;
  samples.reserve(input.records.size());
  std::set<std::string> seen_ids;
  for (std::size_t i = 0; i < input.records.size(); ++i) {
    const Json& record = input.records[i];
    const std::string context =
        config.input_path.string() + " record " + std::to_string(i + 1);
    Sample sample;
    sample.id = require_string(record, "id", context);
    if (!seen_ids.insert(sample.id).second) {
      throw ParseError(context + ": duplicate id '" + sample.id + "'", record.dump());
    }
    const Json& gt = require_field(record, "gt_text", context);
    const Json& ocr_text = require_field(record, "ocr_text", context);
    if (!gt.is_string() || !ocr_text.is_string()) {
      throw ParseError(context + ": 'gt_text' and 'ocr_text' must be strings",
                       record.dump());
    }
    sample.gt_raw = gt.get<std::string>();
    sample.ocr_raw = ocr_text.get<std::string>();
    samples.push_back(std::move(sample));
  }
  std::sort(samples.begin(), samples.end(),
            [](const Sample& a, const Sample& b) { return a.id < b.id; });

  std::vector<Scored> scored(samples.size());
  parallel_for(samples.size(), config.worker_count, [&](std::size_t i) {
    Scored& out = scored[i];
    const auto gt = ocr::normalize_codepoints(samples[i].gt_raw);
    const auto hyp = ocr::normalize_codepoints(samples[i].ocr_raw);
    out.gt_norm = ocr::normalize_text(samples[i].gt_raw);
    out.ocr_norm = ocr::normalize_text(samples[i].ocr_raw);
    out.counts = ocr::align_chars(gt, hyp);
    out.metrics = ocr::compute_metrics(out.counts);
  });

  std::vector<Json> records;
  records.reserve(samples.size() + 1);
  std::vector<ocr::OcrMetrics> per_sample;
  per_sample.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Scored& s = scored[i];
    Json record;
    record["id"] = samples[i].id;
    record["GT_text"] = s.gt_norm;
    record["OCR_text"] = s.ocr_norm;
    record["total_GT_chars"] = s.counts.gt_length();
    record["correct_chars"] = s.counts.correct;
    record["insertions"] = s.counts.insertions;
    record["deletions"] = s.counts.deletions;
    record["substitutions"] = s.counts.substitutions;
    record["accuracy"] = ocr::format_percent(s.metrics.accuracy);
    record["precision"] = ocr::format_percent(s.metrics.precision);
    record["recall"] = ocr::format_percent(s.metrics.recall);
    record["f_score"] = ocr::format_percent(s.metrics.f_score);
    records.push_back(std::move(record));
    per_sample.push_back(s.metrics);
  }
  if (!per_sample.empty()) {
    const ocr::OcrMetrics mean = ocr::aggregate_corpus(per_sample);
    Json summary;
    summary["summary"] = "corpus_mean";
    summary["sample_count"] = per_sample.size();
    summary["accuracy"] = ocr::format_percent(mean.accuracy);
    summary["precision"] = ocr::format_percent(mean.precision);
    summary["recall"] = ocr::format_percent(mean.recall);
    summary["f_score"] = ocr::format_percent(mean.f_score);
    records.push_back(std::move(summary));
  }

  StageReport report;
  report.stage = Stage::OcrEval;
  report.input_count = samples.size();
  report.accepted = samples.size();
  report.output_path = config.output_path;
  report.manifest_digest = write_manifest(config.output_path, schema::kOcrReport, records);
  return report;
}

}  // namespace posterkit::pipeline
