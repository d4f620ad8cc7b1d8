#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace deckgen {

struct ModelConfig {
  std::string provider_endpoint;
  std::string model_name;
  double temperature = 0.0;
  long max_output_tokens = 1024;
  long context_budget_tokens = 16384;
  std::string api_key_env;  // name of the env var holding the secret, may be empty
};

// Throws ConfigError unless context_budget_tokens > max_output_tokens and the
// counts are positive.
void validate_model_config(const ModelConfig& cfg);

// Single-shot chat completion. Implementations throw ProviderError on failure;
// status 0 means a transport-level problem (refused, timeout).
class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  virtual std::string complete(const ModelConfig& cfg, const std::string& prompt) = 0;
};

// Deterministic test/offline double. Rules are checked in order; the first
// whose substring occurs in the prompt wins. A rule with several responses
// serves them one per hit, repeating the last. Every call is logged.
class ScriptedChatProvider : public ChatProvider {
 public:
  ScriptedChatProvider() = default;

  void add_rule(std::string contains, std::vector<std::string> responses);
  void add_rule(std::string contains, std::string response);
  void set_default_response(std::string response);
  // Consulted before the rules; may throw to simulate provider failures.
  void set_handler(std::function<std::optional<std::string>(const std::string&)> handler);

  std::string complete(const ModelConfig& cfg, const std::string& prompt) override;

  std::size_t call_count() const;
  std::vector<std::string> prompts() const;  // copy, in call order

 private:
  struct Rule {
    std::string contains;
    std::vector<std::string> responses;
    std::size_t hits = 0;
  };

  mutable std::mutex mutex_;
  std::vector<Rule> rules_;
  std::optional<std::string> default_response_;
  std::function<std::optional<std::string>(const std::string&)> handler_;
  std::vector<std::string> prompts_;
};

// Loads a scripted provider from a JSON script:
//   {"rules": [{"contains": "...", "response": "..."},
//              {"contains": "...", "responses": ["first", "second"]}],
//    "default": "..."}
std::unique_ptr<ScriptedChatProvider> load_scripted_provider(const std::string& path);

}  // namespace deckgen
