// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "posterkit/core/errors.hpp"
#include "posterkit/core/parallel.hpp"
#include "posterkit/loss/conditioning.hpp"
#include "posterkit/loss/kernels.hpp"
#include "posterkit/loss/schedule.hpp"
#include "posterkit/loss/tensor_io.hpp"
#include "posterkit/pipeline/manifest.hpp"
#include "posterkit/pipeline/stage.hpp"

#include "stage_util.hpp"

namespace posterkit::pipeline {

namespace {

constexpr const char* kInvalid = "invalid";

struct CheckResult {
  bool ok = false;
  double value = 0.0;
  Json extra;  // kind-specific companions (delta, segment layout)
  std::string reason;
  std::string detail;
};

Eigen::MatrixXd to_matrix(const loss::Tensor& tensor, const std::string& what) {
  if (tensor.element_count() == 0) {
    return Eigen::MatrixXd(0, 0);
  }
  if (tensor.shape.size() != 2) {
    throw std::invalid_argument(what + ": expected a rank-2 tensor, got rank " +
                                std::to_string(tensor.shape.size()));
  }
  const Eigen::Index rows = tensor.shape[0];
  const Eigen::Index cols = tensor.shape[1];
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = tensor.values[static_cast<std::size_t>(r * cols + c)];
    }
  }
  return m;
}

}  // namespace

StageReport run_losscheck_stage(const StageConfig& config) {
  check_param_keys(config.params, {}, "losscheck");

  const JsonlFile input = load_manifest(config.input_path, schema::kLossSamples);

  struct Item {
    Json record;
    std::string id;
    std::string kind;
  };
  std::vector<Item> items;
  items.reserve(input.records.size());
  std::set<std::string> seen_ids;
  for (std::size_t i = 0; i < input.records.size(); ++i) {
    const Json& record = input.records[i];
    const std::string context =
        config.input_path.string() + " record " + std::to_string(i + 1);
    Item item;
    item.id = require_string(record, "id", context);
    if (!seen_ids.insert(item.id).second) {
      throw ParseError(context + ": duplicate id '" + item.id + "'", record.dump());
    }
    item.kind = require_string(record, "kind", context);
    if (item.kind != "flow" && item.kind != "weighted_flow" && item.kind != "dpo" &&
        item.kind != "conditioning") {
      throw ParseError(context + ": unknown kind '" + item.kind + "'", record.dump());
    }
    item.record = record;
    items.push_back(std::move(item));
  }
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.id < b.id; });

  const auto load = [&](const Json& record, const char* key,
                        const std::string& context) -> loss::Tensor {
    const std::string ref = require_string(record, key, context);
    return loss::read_tensor(resolve_manifest_path(config.input_path, ref));
  };
  const auto schedule_for = [](const Json& record, const std::string& context) {
    if (!record.contains("schedule")) {
      return loss::NoiseSchedule::linear();
    }
    const std::string name = require_string(record, "schedule", context);
    if (name == "linear") {
      return loss::NoiseSchedule::linear();
    }
    if (name == "trigonometric") {
      return loss::NoiseSchedule::trigonometric();
    }
    throw std::invalid_argument(context + ": unknown schedule '" + name + "'");
  };

  std::vector<CheckResult> results(items.size());
  parallel_for(items.size(), config.worker_count, [&](std::size_t i) {
    const Item& item = items[i];
    CheckResult& out = results[i];
    const std::string context = "sample '" + item.id + "'";
    try {
      if (item.kind == "flow") {
        const Eigen::ArrayXd pred = load(item.record, "pred", context).flat();
        const Eigen::ArrayXd x0 = load(item.record, "x0", context).flat();
        const Eigen::ArrayXd eps = load(item.record, "eps", context).flat();
        const double t = require_double(item.record, "t", context);
        const Eigen::ArrayXd target =
            loss::target_velocity(x0, eps, t, schedule_for(item.record, context));
        out.value = loss::flow_loss(pred, target);
      } else if (item.kind == "weighted_flow") {
        const Eigen::ArrayXd pred = load(item.record, "pred", context).flat();
        const Eigen::ArrayXd x0 = load(item.record, "x0", context).flat();
        const Eigen::ArrayXd eps = load(item.record, "eps", context).flat();
        const Eigen::ArrayXd weight = load(item.record, "weight", context).flat();
        const double t = require_double(item.record, "t", context);
        loss::WeightMode mode = loss::WeightMode::Literal;
        if (item.record.contains("mode")) {
          const std::string name = require_string(item.record, "mode", context);
          if (name == "literal") {
            mode = loss::WeightMode::Literal;
          } else if (name == "squared_error") {
            mode = loss::WeightMode::SquaredErrorWeight;
          } else {
            throw std::invalid_argument(context + ": unknown mode '" + name + "'");
          }
        }
        const Eigen::ArrayXd target =
            loss::target_velocity(x0, eps, t, schedule_for(item.record, context));
        out.value = loss::weighted_flow_loss(pred, target, weight, mode);
      } else if (item.kind == "dpo") {
        loss::DPOInputs inputs;
        inputs.logp_policy_win = require_double(item.record, "logp_policy_win", context);
        inputs.logp_ref_win = require_double(item.record, "logp_ref_win", context);
        inputs.logp_policy_lose = require_double(item.record, "logp_policy_lose", context);
        inputs.logp_ref_lose = require_double(item.record, "logp_ref_lose", context);
        inputs.beta = item.record.contains("beta")
                          ? require_double(item.record, "beta", context)
                          : 1.0;
        out.value = loss::dpo_loss(inputs);
        out.extra["delta"] = loss::dpo_delta(inputs);
      } else {  // conditioning
        const Eigen::MatrixXd prompt =
            to_matrix(load(item.record, "prompt", context), context + " prompt");
        const Eigen::MatrixXd reflection =
            to_matrix(load(item.record, "reflection", context), context + " reflection");
        const Eigen::MatrixXd image =
            to_matrix(load(item.record, "image", context), context + " image");
        const loss::ConditioningSequence seq =
            loss::assemble_conditioning(prompt, reflection, image);
        out.value = static_cast<double>(seq.length());
        out.extra["segment_lengths"] =
            Json::array({seq.prompt_length, seq.reflection_length, seq.image_length});
        const auto bounds = seq.boundaries();
        out.extra["boundaries"] = Json::array({bounds[0], bounds[1]});
      }
      out.ok = true;
    } catch (const IoError& e) {
      out.reason = reason::kIo;
      out.detail = e.what();
    } catch (const ParseError& e) {
      out.reason = kInvalid;
      out.detail = e.what();
    } catch (const std::invalid_argument& e) {
      out.reason = kInvalid;
      out.detail = e.what();
    }
  });

  std::vector<Json> records;
  records.reserve(items.size());
  StageReport report;
  report.stage = Stage::LossCheck;
  report.input_count = items.size();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const CheckResult& result = results[i];
    Json record;
    record["id"] = items[i].id;
    record["kind"] = items[i].kind;
    if (result.ok) {
      record["status"] = "ok";
      record["value"] = result.value;
      for (const auto& [key, value] : result.extra.items()) {
        record[key] = value;
      }
      report.accepted += 1;
    } else {
      record["status"] = "rejected";
      record["reason"] = result.reason;
      record["detail"] = result.detail;
      report.rejections[result.reason] += 1;
    }
    records.push_back(std::move(record));
  }

  report.output_path = config.output_path;
  report.manifest_digest = write_manifest(config.output_path, schema::kLossReport, records);
  return report;
}

}  // namespace posterkit::pipeline
