// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include "posterkit/pipeline/vlm_client.hpp"

#include <cstdlib>
#include <thread>
#include <utility>

#include <httplib.h>

#include "posterkit/core/digest.hpp"
#include "posterkit/core/errors.hpp"
#include "posterkit/core/fsutil.hpp"
#include "posterkit/core/jsonl.hpp"

namespace posterkit::pipeline {

namespace {

// Unambiguous framing: each field is rendered as "<length>:<bytes>;" so no
// combination of template id, prompt, and digests can collide with another.
void frame(std::string& out, const std::string& field) {
  out += std::to_string(field.size());
  out += ':';
  out += field;
  out += ';';
}

}  // namespace

const char* vlm_mode_name(VlmMode mode) {
  return mode == VlmMode::Live ? "live" : "replay";
}

std::string vlm_cache_key(const VlmRequest& request) {
  std::string material;
  frame(material, request.template_id);
  frame(material, request.rendered_prompt);
  material += std::to_string(request.attachment_digests.size());
  material += '#';
  for (const std::string& digest : request.attachment_digests) {
    frame(material, digest);
  }
  return sha256_hex(material);
}

std::filesystem::path capture_path(const std::filesystem::path& dir, const std::string& key) {
  return dir / (key + ".txt");
}

ReplayClient::ReplayClient(std::filesystem::path dir) : dir_(std::move(dir)) {}

VlmReply ReplayClient::complete(const VlmRequest& request) {
  VlmReply reply;
  reply.cache_key = vlm_cache_key(request);
  if (auto captured = try_read_file(capture_path(dir_, reply.cache_key))) {
    reply.raw = std::move(*captured);
  } else {
    reply.error = reason::kReplayMiss;
  }
  return reply;
}

LiveClientOptions live_options_from_env(std::filesystem::path capture_dir) {
  LiveClientOptions options;
  const char* endpoint = std::getenv(kEndpointEnvVar);
  if (endpoint == nullptr || *endpoint == '\0') {
    throw ConfigError(std::string("live VLM client requires ") + kEndpointEnvVar);
  }
  options.endpoint = endpoint;
  if (const char* token = std::getenv(kTokenEnvVar)) {
    options.token = token;
  }
  options.capture_dir = std::move(capture_dir);
  return options;
}

LiveClient::LiveClient(LiveClientOptions options) : options_(std::move(options)) {
  if (options_.endpoint.empty()) {
    throw ConfigError("live VLM client: empty endpoint");
  }
  if (options_.capture_dir.empty()) {
    throw ConfigError("live VLM client: capture directory required");
  }
  if (options_.max_attempts < 1) {
    throw ConfigError("live VLM client: max_attempts must be >= 1");
  }
}

VlmReply LiveClient::complete(const VlmRequest& request) {
  VlmReply reply;
  reply.cache_key = vlm_cache_key(request);

  const std::filesystem::path captured = capture_path(options_.capture_dir, reply.cache_key);
  if (auto hit = try_read_file(captured)) {
    reply.raw = std::move(*hit);
    return reply;
  }

  Json body;
  body["template_id"] = request.template_id;
  body["prompt"] = request.rendered_prompt;
  body["attachments"] = request.attachment_digests;
  const std::string payload = body.dump();

  std::string last_error;
  auto backoff = options_.initial_backoff;
  for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }

    httplib::Client client(options_.endpoint);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    if (!options_.token.empty()) {
      client.set_bearer_token_auth(options_.token);
    }

    auto result = client.Post("/v1/complete", payload, "application/json");
    if (!result) {
      last_error = std::string("transport: ") + httplib::to_string(result.error());
      continue;  // transport problems are worth retrying
    }
    if (result->status == 200) {
      // Persist before handing the bytes to any parser, so responses survive
      // downstream failures and feed later replay runs.
      write_file_atomic(captured, result->body);
      reply.raw = result->body;
      return reply;
    }
    last_error = "http " + std::to_string(result->status);
    if (result->status < 500) {
      break;  // the request itself is bad; retrying cannot help
    }
  }

  reply.error = reason::kClientError;
  reply.detail = last_error;
  return reply;
}

}  // namespace posterkit::pipeline
