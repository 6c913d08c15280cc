// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <thread>

#include <httplib.h>

#include "posterkit/core/digest.hpp"
#include "posterkit/core/errors.hpp"
#include "posterkit/core/fsutil.hpp"
#include "posterkit/pipeline/manifest.hpp"
#include "posterkit/pipeline/stage.hpp"
#include "posterkit/pipeline/templates.hpp"
#include "posterkit/pipeline/vlm_client.hpp"

namespace fs = std::filesystem;
using namespace posterkit;
using namespace posterkit::pipeline;

namespace {

fs::path temp_dir(const char* tag) {
  fs::path dir = fs::temp_directory_path() / (std::string("posterkit_pipeline_") + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("template catalog ships the full prompt set") {
  const auto& ids = TemplateCatalog::known_ids();
  CHECK(ids.size() == 9);
  const auto& catalog = TemplateCatalog::builtin();
  for (const std::string& id : ids) {
    REQUIRE(catalog.contains(id));
    const PromptTemplate& tpl = catalog.get(id);
    CHECK(tpl.id == id);
    REQUIRE(!tpl.text.empty());
    CHECK(tpl.text.back() == '\n');
  }
  CHECK(!catalog.contains("nope"));
  CHECK_THROWS_AS(catalog.get("nope"), ConfigError);
}

TEST_CASE("alignment template renders its slot and unescapes braces") {
  const auto& tpl = TemplateCatalog::builtin().get("alignment_eval");
  CHECK(tpl.text.find("{original_prompt_text}") != std::string::npos);
  const std::string out = render_template(tpl, {{"original_prompt", "Neon Jazz Night"}});
  CHECK(out.find("Neon Jazz Night") != std::string::npos);
  CHECK(out.find("{original_prompt_text}") == std::string::npos);
  // Doubled braces in the body collapse to literal JSON examples.
  CHECK(out.find("{\"final_decision\": \"1\"}") != std::string::npos);
  CHECK(out.find("{{") == std::string::npos);
}

TEST_CASE("each template keeps its own slot marker spelling") {
  const auto& catalog = TemplateCatalog::builtin();
  CHECK(catalog.get("best_of_six").text.find("{`original_prompt`}") != std::string::npos);
  CHECK(catalog.get("ocr_eval").text.find("`original_prompt_text`") != std::string::npos);
  const std::string best =
      render_template(catalog.get("best_of_six"), {{"original_prompt", "SALE"}});
  CHECK(best.find("SALE") != std::string::npos);
  CHECK(best.find("{`original_prompt`}") == std::string::npos);
  CHECK(best.find("{\"best_image\": \"1\"}") != std::string::npos);
  const std::string ocr =
      render_template(catalog.get("ocr_eval"), {{"original_prompt", "GRAND OPENING"}});
  CHECK(ocr.find("GRAND OPENING") != std::string::npos);
  CHECK(ocr.find("`original_prompt_text`") == std::string::npos);
}

TEST_CASE("slotless templates render unchanged") {
  const auto& catalog = TemplateCatalog::builtin();
  for (const char* id : {"mllm_scorer", "gemini_caption", "gemini_mask",
                         "feedback_collection", "ocr_eval"}) {
    const PromptTemplate& tpl = catalog.get(id);
    if (!tpl.slots.empty()) {
      continue;  // ocr_eval carries a slot; covered above
    }
    CHECK(render_template(tpl, {}) == tpl.text);
  }
  // The mask prompt keeps its single-brace JSON examples verbatim.
  const std::string mask = render_template(catalog.get("gemini_mask"), {});
  CHECK(mask.find("{\"text_regions\": []}") != std::string::npos);
}

TEST_CASE("render rejects argument sets that do not match the slots") {
  const auto& catalog = TemplateCatalog::builtin();
  CHECK_THROWS_AS(render_template(catalog.get("alignment_eval"), {}), ConfigError);
  CHECK_THROWS_AS(render_template(catalog.get("alignment_eval"),
                                  {{"original_prompt", "x"}, {"extra", "y"}}),
                  ConfigError);
  CHECK_THROWS_AS(render_template(catalog.get("feedback_collection"), {{"bogus", "x"}}),
                  ConfigError);
}

TEST_CASE("asset prompt files match the compiled-in catalog") {
  const fs::path dir = fs::path(POSTERKIT_SOURCE_DIR) / "assets" / "prompts";
  const TemplateCatalog loaded = TemplateCatalog::load(dir);
  const auto& builtin = TemplateCatalog::builtin();
  for (const std::string& id : TemplateCatalog::known_ids()) {
    INFO(id);
    CHECK(loaded.get(id).text == builtin.get(id).text);
  }
}

TEST_CASE("catalog load fails on a missing prompt file") {
  const fs::path dir = temp_dir("cat_missing");
  CHECK_THROWS_AS(TemplateCatalog::load(dir), IoError);
}

TEST_CASE("cache keys separate every request field") {
  VlmRequest base{"alignment_eval", "prompt text", {"d1", "d2"}};
  const std::string key = vlm_cache_key(base);
  CHECK(key.size() == 64);
  CHECK(key.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(vlm_cache_key(base) == key);

  VlmRequest other = base;
  other.template_id = "best_of_six";
  CHECK(vlm_cache_key(other) != key);
  other = base;
  other.rendered_prompt = "prompt text!";
  CHECK(vlm_cache_key(other) != key);
  other = base;
  other.attachment_digests = {"d1"};
  CHECK(vlm_cache_key(other) != key);
}

TEST_CASE("cache keys resist field concatenation collisions") {
  VlmRequest a{"t", "p", {"ab", "c"}};
  VlmRequest b{"t", "p", {"a", "bc"}};
  CHECK(vlm_cache_key(a) != vlm_cache_key(b));
  VlmRequest c{"tp", "", {"ab", "c"}};
  CHECK(vlm_cache_key(c) != vlm_cache_key(a));
  VlmRequest d{"t", "p", {"abc"}};
  CHECK(vlm_cache_key(d) != vlm_cache_key(a));
}

TEST_CASE("replay client serves captures and flags misses") {
  const fs::path dir = temp_dir("replay");
  VlmRequest req{"gemini_mask", "find the text", {"abc123"}};
  const std::string key = vlm_cache_key(req);
  write_file_atomic(capture_path(dir, key), "{\"text_regions\": []}");

  ReplayClient client(dir);
  CHECK(client.mode() == VlmMode::Replay);
  VlmReply hit = client.complete(req);
  CHECK(hit.ok());
  CHECK(hit.raw == "{\"text_regions\": []}");
  CHECK(hit.cache_key == key);

  req.attachment_digests = {"different"};
  VlmReply miss = client.complete(req);
  CHECK(!miss.ok());
  CHECK(miss.error == reason::kReplayMiss);
}

namespace {

struct TestServer {
  httplib::Server server;
  std::thread runner;
  int port = 0;
  std::atomic<int> hits{0};

  template <typename Handler>
  explicit TestServer(Handler handler) {
    server.Post("/v1/complete", [this, handler](const httplib::Request& req,
                                                httplib::Response& res) {
      const int n = ++hits;
      handler(n, req, res);
    });
    port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    runner = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }

  ~TestServer() {
    server.stop();
    runner.join();
  }

  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port); }
};

LiveClientOptions fast_options(const std::string& endpoint, const fs::path& capture_dir) {
  LiveClientOptions options;
  options.endpoint = endpoint;
  options.capture_dir = capture_dir;
  options.max_attempts = 3;
  options.initial_backoff = std::chrono::milliseconds(1);
  options.timeout = std::chrono::seconds(5);
  return options;
}

}  // namespace

TEST_CASE("live client posts the request and persists the response first") {
  const fs::path captures = temp_dir("live_ok");
  std::string seen_body;
  TestServer server([&](int, const httplib::Request& req, httplib::Response& res) {
    seen_body = req.body;
    res.set_content("{\"final_decision\": \"1\"}", "text/plain");
  });

  LiveClient client(fast_options(server.endpoint(), captures));
  CHECK(client.mode() == VlmMode::Live);
  VlmRequest req{"alignment_eval", "judge this", {"deadbeef"}};
  VlmReply reply = client.complete(req);
  REQUIRE(reply.ok());
  CHECK(reply.raw == "{\"final_decision\": \"1\"}");
  CHECK(server.hits.load() == 1);

  const Json body = parse_json(seen_body, "request body");
  CHECK(body["template_id"] == "alignment_eval");
  CHECK(body["prompt"] == "judge this");
  CHECK(body["attachments"] == Json::array({"deadbeef"}));

  const auto captured = try_read_file(capture_path(captures, reply.cache_key));
  REQUIRE(captured.has_value());
  CHECK(*captured == reply.raw);
}

TEST_CASE("live client short-circuits on an existing capture") {
  const fs::path captures = temp_dir("live_hit");
  TestServer server([&](int, const httplib::Request&, httplib::Response& res) {
    res.set_content("fresh", "text/plain");
  });
  VlmRequest req{"gemini_mask", "boxes", {}};
  write_file_atomic(capture_path(captures, vlm_cache_key(req)), "cached");

  LiveClient client(fast_options(server.endpoint(), captures));
  VlmReply reply = client.complete(req);
  REQUIRE(reply.ok());
  CHECK(reply.raw == "cached");
  CHECK(server.hits.load() == 0);
}

TEST_CASE("live client retries server errors with backoff") {
  const fs::path captures = temp_dir("live_retry");
  TestServer server([&](int n, const httplib::Request&, httplib::Response& res) {
    if (n == 1) {
      res.status = 503;
      res.set_content("busy", "text/plain");
    } else {
      res.set_content("ok now", "text/plain");
    }
  });

  LiveClient client(fast_options(server.endpoint(), captures));
  VlmReply reply = client.complete({"mllm_scorer", "rate", {}});
  REQUIRE(reply.ok());
  CHECK(reply.raw == "ok now");
  CHECK(server.hits.load() == 2);
}

TEST_CASE("live client fails fast on client-side HTTP errors") {
  const fs::path captures = temp_dir("live_4xx");
  TestServer server([&](int, const httplib::Request&, httplib::Response& res) {
    res.status = 404;
    res.set_content("no such route", "text/plain");
  });

  LiveClient client(fast_options(server.endpoint(), captures));
  VlmReply reply = client.complete({"mllm_scorer", "rate", {}});
  CHECK(!reply.ok());
  CHECK(reply.error == reason::kClientError);
  CHECK(reply.detail.find("404") != std::string::npos);
  CHECK(server.hits.load() == 1);
}

TEST_CASE("live client exhausts retries against a dead endpoint") {
  const fs::path captures = temp_dir("live_dead");
  LiveClientOptions options = fast_options("http://127.0.0.1:9", captures);
  options.max_attempts = 2;
  LiveClient client(options);
  VlmReply reply = client.complete({"mllm_scorer", "rate", {}});
  CHECK(!reply.ok());
  CHECK(reply.error == reason::kClientError);
}

TEST_CASE("live options come from the environment") {
  unsetenv(kEndpointEnvVar);
  CHECK_THROWS_AS(live_options_from_env("caps"), ConfigError);
  setenv(kEndpointEnvVar, "http://example.test:9999", 1);
  setenv(kTokenEnvVar, "sekrit", 1);
  const LiveClientOptions options = live_options_from_env("caps");
  CHECK(options.endpoint == "http://example.test:9999");
  CHECK(options.token == "sekrit");
  CHECK(options.capture_dir == fs::path("caps"));
  unsetenv(kEndpointEnvVar);
  unsetenv(kTokenEnvVar);
}

TEST_CASE("stage config parses fields and resolves relative paths") {
  const Json doc = {
      {"schema", "posterkit.stage-config"},
      {"version", 1},
      {"stage", "curate"},
      {"input", "in/posters.jsonl"},
      {"output", "out/curated.jsonl"},
      {"workers", 4},
      {"seed", 99},
      {"replay_dir", "captures"},
      {"params", {{"scores", "scores.jsonl"}}},
  };
  const StageConfig config = parse_stage_config(doc, "/data/run");
  CHECK(config.stage == Stage::Curate);
  CHECK(config.input_path == fs::path("/data/run/in/posters.jsonl"));
  CHECK(config.output_path == fs::path("/data/run/out/curated.jsonl"));
  CHECK(config.worker_count == 4);
  CHECK(config.master_seed == 99);
  REQUIRE(config.replay_dir.has_value());
  CHECK(*config.replay_dir == fs::path("/data/run/captures"));
  CHECK(config.params["scores"] == "scores.jsonl");
  CHECK(config.base_dir == fs::path("/data/run"));
}

TEST_CASE("stage config rejects structural problems before any work") {
  Json good = {{"schema", "posterkit.stage-config"},
               {"stage", "pairs"},
               {"input", "a.jsonl"},
               {"output", "b.jsonl"}};
  CHECK_NOTHROW(parse_stage_config(good, "/r"));

  Json bad = good;
  bad["schema"] = "something-else";
  CHECK_THROWS_AS(parse_stage_config(bad, "/r"), ConfigError);

  bad = good;
  bad.erase("output");
  CHECK_THROWS_AS(parse_stage_config(bad, "/r"), ConfigError);

  bad = good;
  bad["stage"] = "transmogrify";
  CHECK_THROWS_AS(parse_stage_config(bad, "/r"), ConfigError);

  bad = good;
  bad["output"] = "a.jsonl";  // collides with input
  CHECK_THROWS_AS(parse_stage_config(bad, "/r"), ConfigError);

  bad = good;
  bad["workers"] = 0;
  CHECK_THROWS_AS(parse_stage_config(bad, "/r"), ConfigError);

  bad = good;
  bad["seed"] = -4;
  CHECK_THROWS_AS(parse_stage_config(bad, "/r"), ConfigError);

  bad = good;
  bad.erase("input");  // pairs needs an input manifest
  CHECK_THROWS_AS(parse_stage_config(bad, "/r"), ConfigError);

  Json forge = {{"schema", "posterkit.stage-config"},
                {"stage", "forge"},
                {"output", "f.jsonl"}};
  CHECK_NOTHROW(parse_stage_config(forge, "/r"));  // forge has no input
}

TEST_CASE("command-line overrides beat the config file") {
  Json doc = {{"schema", "posterkit.stage-config"},
              {"stage", "forge"},
              {"output", "f.jsonl"},
              {"seed", 1},
              {"workers", 2}};
  StageConfig config = parse_stage_config(doc, "/r");
  StageOverrides overrides;
  overrides.seed = 777;
  overrides.workers = 8;
  overrides.replay_dir = fs::path("/caps");
  apply_overrides(config, overrides);
  CHECK(config.master_seed == 777);
  CHECK(config.worker_count == 8);
  REQUIRE(config.replay_dir.has_value());
  CHECK(*config.replay_dir == fs::path("/caps"));

  overrides.workers = 0;
  CHECK_THROWS_AS(apply_overrides(config, overrides), ConfigError);
}

TEST_CASE("manifest write and load round-trip with digest") {
  const fs::path dir = temp_dir("manifest");
  const fs::path file = dir / "m.jsonl";
  std::vector<Json> records = {{{"id", "a"}, {"v", 1}}, {{"id", "b"}, {"v", 2}}};
  const std::string digest = write_manifest(file, schema::kCuration, records);
  CHECK(digest == sha256_hex(read_file(file)));

  const JsonlFile loaded = load_manifest(file, schema::kCuration);
  CHECK(loaded.header["schema"] == schema::kCuration);
  CHECK(loaded.header["version"] == 1);
  REQUIRE(loaded.records.size() == 2);
  CHECK(loaded.records[1]["id"] == "b");

  CHECK_THROWS_AS(load_manifest(file, schema::kForge), ParseError);
  CHECK_THROWS_AS(load_manifest(dir / "absent.jsonl", schema::kForge), IoError);
}

TEST_CASE("manifest field accessors name the offending record") {
  const Json record = {{"id", "x"}, {"n", 3}, {"f", 1.5}, {"s", "text"}};
  CHECK(require_string(record, "s", "ctx") == "text");
  CHECK(require_int(record, "n", "ctx") == 3);
  CHECK(require_double(record, "f", "ctx") == doctest::Approx(1.5));
  CHECK(require_double(record, "n", "ctx") == doctest::Approx(3.0));
  CHECK_THROWS_AS(require_field(record, "missing", "ctx"), ParseError);
  CHECK_THROWS_AS(require_string(record, "n", "ctx"), ParseError);
  CHECK_THROWS_AS(require_int(record, "s", "ctx"), ParseError);
  try {
    require_field(record, "missing", "here");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("here") != std::string::npos);
  }
}

TEST_CASE("make_vlm_client picks replay when a directory is configured") {
  StageConfig config;
  config.replay_dir = temp_dir("mk_replay");
  auto client = make_vlm_client(config, temp_dir("mk_caps"));
  CHECK(client->mode() == VlmMode::Replay);

  StageConfig live;
  unsetenv(kEndpointEnvVar);
  CHECK_THROWS_AS(make_vlm_client(live, temp_dir("mk_caps2")), ConfigError);
}
