#pragma once

#include <mutex>
#include <string>

#include "deckgen/provider.hpp"

namespace deckgen {

struct ChatExchange {
  std::string prompt;
  std::string response;
  ModelConfig model;
  std::string cache_key;
};

std::string compute_cache_key(const ModelConfig& cfg, const std::string& prompt);

struct RetryPolicy {
  int max_retries = 3;       // retries after the first attempt
  int base_delay_ms = 1000;  // doubled per retry: 1s/2s/4s
};

struct GatewayOptions {
  std::string cache_dir;  // empty disables caching
  RetryPolicy retry;
};

// Provider access with context budgeting, deterministic on-disk response
// caching and retry on transient failures (timeout, 429, 5xx). Safe for
// concurrent calls; cache writes are serialized.
class Gateway {
 public:
  explicit Gateway(ChatProvider& provider, GatewayOptions options = {});

  // Throws ContextOverflow before any provider call when the prompt estimate
  // exceeds context_budget_tokens - max_output_tokens. ProviderError after
  // retries are exhausted.
  std::string complete(const ModelConfig& cfg, const std::string& prompt,
                       bool bypass_cache = false);

  bool caching_enabled() const { return !options_.cache_dir.empty(); }

 private:
  std::string cache_path(const std::string& key) const;
  bool cache_lookup(const std::string& key, const std::string& prompt, std::string* response);
  void cache_store(const ChatExchange& exchange);

  ChatProvider& provider_;
  GatewayOptions options_;
  std::mutex cache_mutex_;
};

}  // namespace deckgen
