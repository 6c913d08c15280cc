// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace posterkit::pipeline {

enum class VlmMode { Live, Replay };

const char* vlm_mode_name(VlmMode mode);

// Stable per-record failure reasons shared by the stages.
namespace reason {
inline constexpr const char* kReplayMiss = "replay_miss";
inline constexpr const char* kClientError = "client_error";
inline constexpr const char* kParseError = "parse_error";
inline constexpr const char* kIo = "io";
}  // namespace reason

// One prompt sent to the external judge: a template id, the fully rendered
// prompt text, and content digests of the attached images.
struct VlmRequest {
  std::string template_id;
  std::string rendered_prompt;
  std::vector<std::string> attachment_digests;
};

struct VlmReply {
  std::string cache_key;
  std::string raw;     // response bytes; meaningful only when ok()
  std::string error;   // empty, reason::kReplayMiss, or reason::kClientError
  std::string detail;  // transport or HTTP specifics for error reporting

  bool ok() const { return error.empty(); }
};

// SHA-256 over the template id, the rendered prompt, and every attachment
// digest. Each field is length-prefixed before hashing so distinct requests
// can never produce the same key through concatenation.
std::string vlm_cache_key(const VlmRequest& request);

// Path of the captured response for a cache key inside a capture directory.
std::filesystem::path capture_path(const std::filesystem::path& dir, const std::string& key);

class VlmClient {
 public:
  virtual ~VlmClient() = default;
  virtual VlmMode mode() const = 0;

  // Resolves a request to raw response bytes. Implementations never parse;
  // parsing belongs to the module that owns the response format.
  virtual VlmReply complete(const VlmRequest& request) = 0;
};

// Serves captured responses from a directory of <cache-key>.txt files.
// Never performs network I/O; a missing capture is a replay_miss.
class ReplayClient final : public VlmClient {
 public:
  explicit ReplayClient(std::filesystem::path dir);

  VlmMode mode() const override { return VlmMode::Replay; }
  VlmReply complete(const VlmRequest& request) override;

 private:
  std::filesystem::path dir_;
};

struct LiveClientOptions {
  std::string endpoint;                    // e.g. http://127.0.0.1:8080
  std::string token;                       // optional bearer credential
  std::filesystem::path capture_dir;       // every response lands here first
  int max_attempts = 3;                    // total tries per request
  std::chrono::milliseconds initial_backoff{200};  // doubles per retry
  std::chrono::seconds timeout{30};
};

inline constexpr const char* kEndpointEnvVar = "POSTERKIT_VLM_ENDPOINT";
inline constexpr const char* kTokenEnvVar = "POSTERKIT_VLM_TOKEN";

// Builds options from POSTERKIT_VLM_ENDPOINT / POSTERKIT_VLM_TOKEN.
// An unset endpoint raises ConfigError.
LiveClientOptions live_options_from_env(std::filesystem::path capture_dir);

// POSTs {"template_id", "prompt", "attachments"} to <endpoint>/v1/complete
// and treats the response body as the raw reply. Response bytes are written
// to the capture directory before the reply is returned, so a crashed or
// interrupted run never loses paid responses and a later run replays them.
// An existing capture short-circuits the network entirely. Transport errors
// and 5xx responses are retried with exponential backoff up to max_attempts;
// other HTTP errors fail immediately as client_error.
class LiveClient final : public VlmClient {
 public:
  explicit LiveClient(LiveClientOptions options);

  VlmMode mode() const override { return VlmMode::Live; }
  VlmReply complete(const VlmRequest& request) override;

 private:
  LiveClientOptions options_;
};

}  // namespace posterkit::pipeline
