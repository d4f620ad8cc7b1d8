#include "deckgen/gateway.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "deckgen/errors.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

namespace {

std::string canonical_temperature(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", t);
  return buf;
}

bool retryable_status(int status) {
  return status == 0 || status == 429 || (status >= 500 && status < 600);
}

}  // namespace

std::string compute_cache_key(const ModelConfig& cfg, const std::string& prompt) {
  std::string material = prompt;
  material.push_back('\x1f');
  material += cfg.model_name;
  material.push_back('\x1f');
  material += canonical_temperature(cfg.temperature);
  material.push_back('\x1f');
  material += std::to_string(cfg.max_output_tokens);
  return fnv1a64_hex(material);
}

Gateway::Gateway(ChatProvider& provider, GatewayOptions options)
    : provider_(provider), options_(std::move(options)) {}

std::string Gateway::cache_path(const std::string& key) const {
  return (std::filesystem::path(options_.cache_dir) / (key + ".json")).string();
}

bool Gateway::cache_lookup(const std::string& key, const std::string& prompt,
                           std::string* response) {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  std::ifstream in(cache_path(key), std::ios::binary);
  if (!in) return false;
  try {
    nlohmann::json entry = nlohmann::json::parse(in);
    // a stored prompt that differs means a key collision; treat as a miss
    if (entry.value("prompt", "") != prompt) return false;
    *response = entry.at("response").get<std::string>();
    return true;
  } catch (const std::exception&) {
    return false;  // unreadable entries are regenerated
  }
}

void Gateway::cache_store(const ChatExchange& exchange) {
  nlohmann::ordered_json entry;
  entry["cache_key"] = exchange.cache_key;
  entry["prompt"] = exchange.prompt;
  entry["response"] = exchange.response;
  entry["model"] = {
      {"provider_endpoint", exchange.model.provider_endpoint},
      {"model_name", exchange.model.model_name},
      {"temperature", exchange.model.temperature},
      {"max_output_tokens", exchange.model.max_output_tokens},
      {"context_budget_tokens", exchange.model.context_budget_tokens},
  };
  std::lock_guard<std::mutex> lock(cache_mutex_);
  std::error_code ec;
  std::filesystem::create_directories(options_.cache_dir, ec);
  write_file_atomic(cache_path(exchange.cache_key), entry.dump(2) + "\n");
}

std::string Gateway::complete(const ModelConfig& cfg, const std::string& prompt,
                              bool bypass_cache) {
  validate_model_config(cfg);
  const long available = cfg.context_budget_tokens - cfg.max_output_tokens;
  const long estimate = estimate_tokens(prompt);
  if (estimate > available) throw ContextOverflow(estimate, available);

  const std::string key = compute_cache_key(cfg, prompt);
  if (caching_enabled() && !bypass_cache) {
    std::string cached;
    if (cache_lookup(key, prompt, &cached)) return cached;
  }

  std::string response;
  int attempt = 0;
  for (;;) {
    try {
      response = provider_.complete(cfg, prompt);
      break;
    } catch (const ProviderError& e) {
      if (!retryable_status(e.status()) || attempt >= options_.retry.max_retries) throw;
      const int delay_ms = options_.retry.base_delay_ms << attempt;
      if (delay_ms > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
      ++attempt;
    }
  }

  if (caching_enabled()) {
    cache_store(ChatExchange{prompt, response, cfg, key});
  }
  return response;
}

}  // namespace deckgen
