#include <doctest.h>

#include <filesystem>

#include "deckgen/errors.hpp"
#include "deckgen/gateway.hpp"
#include "support/test_support.hpp"

using namespace deckgen;

namespace {

ModelConfig test_model() {
  ModelConfig cfg;
  cfg.model_name = "scripted";
  cfg.max_output_tokens = 64;
  cfg.context_budget_tokens = 1024;
  return cfg;
}

GatewayOptions no_delay(std::string cache_dir = "") {
  GatewayOptions options;
  options.cache_dir = std::move(cache_dir);
  options.retry.base_delay_ms = 0;
  return options;
}

}  // namespace

TEST_SUITE("gateway") {

TEST_CASE("echo provider round trip") {
  ScriptedChatProvider provider;
  provider.set_default_response("OK");
  Gateway gateway(provider, no_delay());
  CHECK(gateway.complete(test_model(), "hello") == "OK");
  CHECK(provider.call_count() == 1);
}

TEST_CASE("context overflow raises before any provider call") {
  ScriptedChatProvider provider;
  provider.set_default_response("OK");
  Gateway gateway(provider, no_delay());
  ModelConfig cfg = test_model();
  cfg.context_budget_tokens = 80;
  cfg.max_output_tokens = 64;  // leaves 16 tokens = 64 chars
  const std::string prompt(65 * 4, 'x');
  CHECK_THROWS_AS(gateway.complete(cfg, prompt), ContextOverflow);
  CHECK(provider.call_count() == 0);
}

TEST_CASE("cache: n identical requests hit the provider once") {
  const auto dir = testsupport::make_temp_dir("cache");
  ScriptedChatProvider provider;
  provider.set_default_response("CACHED");
  Gateway gateway(provider, no_delay(dir.string()));
  for (int i = 0; i < 5; ++i) {
    CHECK(gateway.complete(test_model(), "same prompt") == "CACHED");
  }
  CHECK(provider.call_count() == 1);

  // a second gateway over the same directory reuses the entries
  Gateway second(provider, no_delay(dir.string()));
  CHECK(second.complete(test_model(), "same prompt") == "CACHED");
  CHECK(provider.call_count() == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache keys involve model, temperature and output cap") {
  const ModelConfig base = test_model();
  ModelConfig other_model = base;
  other_model.model_name = "different";
  ModelConfig other_temp = base;
  other_temp.temperature = 0.7;
  ModelConfig other_max = base;
  other_max.max_output_tokens = 32;

  const std::string key = compute_cache_key(base, "p");
  CHECK(key != compute_cache_key(other_model, "p"));
  CHECK(key != compute_cache_key(other_temp, "p"));
  CHECK(key != compute_cache_key(other_max, "p"));
  CHECK(key != compute_cache_key(base, "q"));
  CHECK(key == compute_cache_key(base, "p"));
}

TEST_CASE("bypass_cache forces a fresh provider call") {
  const auto dir = testsupport::make_temp_dir("bypass");
  ScriptedChatProvider provider;
  provider.add_rule("p", {"first", "second"});
  Gateway gateway(provider, no_delay(dir.string()));
  CHECK(gateway.complete(test_model(), "p") == "first");
  CHECK(gateway.complete(test_model(), "p") == "first");  // cache hit
  CHECK(gateway.complete(test_model(), "p", /*bypass_cache=*/true) == "second");
  CHECK(provider.call_count() == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("transient provider failures are retried") {
  ScriptedChatProvider provider;
  int failures = 2;
  provider.set_handler([&](const std::string&) -> std::optional<std::string> {
    if (failures > 0) {
      --failures;
      throw ProviderError(503, "unavailable");
    }
    return std::nullopt;  // fall through to rules
  });
  provider.set_default_response("recovered");
  Gateway gateway(provider, no_delay());
  CHECK(gateway.complete(test_model(), "p") == "recovered");
  CHECK(provider.call_count() == 3);
}

TEST_CASE("429 is retryable, 400 is not") {
  ScriptedChatProvider provider;
  int bursts = 1;
  provider.set_handler([&](const std::string&) -> std::optional<std::string> {
    if (bursts > 0) {
      --bursts;
      throw ProviderError(429, "slow down");
    }
    return std::string("after-429");
  });
  Gateway gateway(provider, no_delay());
  CHECK(gateway.complete(test_model(), "p") == "after-429");

  ScriptedChatProvider bad_request;
  bad_request.set_handler([](const std::string&) -> std::optional<std::string> {
    throw ProviderError(400, "bad request");
  });
  Gateway strict(bad_request, no_delay());
  CHECK_THROWS_AS(strict.complete(test_model(), "p"), ProviderError);
  CHECK(bad_request.call_count() == 1);
}

TEST_CASE("retries are exhausted after max_retries") {
  ScriptedChatProvider provider;
  provider.set_handler([](const std::string&) -> std::optional<std::string> {
    throw ProviderError(500, "down");
  });
  Gateway gateway(provider, no_delay());
  CHECK_THROWS_AS(gateway.complete(test_model(), "p"), ProviderError);
  CHECK(provider.call_count() == 4);  // initial attempt + 3 retries
}

TEST_CASE("scripted rules serve sequential responses per rule") {
  ScriptedChatProvider provider;
  provider.add_rule("alpha", {"one", "two"});
  const ModelConfig cfg = test_model();
  CHECK(provider.complete(cfg, "alpha 1") == "one");
  CHECK(provider.complete(cfg, "alpha 2") == "two");
  CHECK(provider.complete(cfg, "alpha 3") == "two");  // last response repeats
  CHECK_THROWS_AS(provider.complete(cfg, "unmatched"), ProviderError);
}

}  // TEST_SUITE
