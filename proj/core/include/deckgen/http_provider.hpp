#pragma once

#include <string>
#include <utility>

#include "deckgen/provider.hpp"

namespace deckgen {

// Splits "http://host:port/v1/chat" into ("http://host:port", "/v1/chat").
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint);

// Reads the secret named by cfg.api_key_env. Empty env name means no auth.
// Throws ProviderError(401) when the variable is named but unset, so a
// misconfigured run fails before any network call.
std::string resolve_api_key(const ModelConfig& cfg);

// Chat-completions wire client: POST {model, messages, temperature,
// max_tokens} to the endpoint, reading choices[0].message.content.
class HttpChatProvider : public ChatProvider {
 public:
  explicit HttpChatProvider(int timeout_sec = 120) : timeout_sec_(timeout_sec) {}
  std::string complete(const ModelConfig& cfg, const std::string& prompt) override;

 private:
  int timeout_sec_;
};

}  // namespace deckgen
