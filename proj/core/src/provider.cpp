#include "deckgen/provider.hpp"

#include <nlohmann/json.hpp>

#include "deckgen/errors.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

void validate_model_config(const ModelConfig& cfg) {
  if (cfg.max_output_tokens <= 0) {
    throw ConfigError("max_output_tokens must be positive");
  }
  if (cfg.context_budget_tokens <= 0) {
    throw ConfigError("context_budget_tokens must be positive");
  }
  if (cfg.context_budget_tokens <= cfg.max_output_tokens) {
    throw ConfigError("context_budget_tokens must exceed max_output_tokens");
  }
  if (cfg.temperature < 0) {
    throw ConfigError("temperature must be >= 0");
  }
}

void ScriptedChatProvider::add_rule(std::string contains, std::vector<std::string> responses) {
  std::lock_guard<std::mutex> lock(mutex_);
  rules_.push_back({std::move(contains), std::move(responses), 0});
}

void ScriptedChatProvider::add_rule(std::string contains, std::string response) {
  add_rule(std::move(contains), std::vector<std::string>{std::move(response)});
}

void ScriptedChatProvider::set_default_response(std::string response) {
  std::lock_guard<std::mutex> lock(mutex_);
  default_response_ = std::move(response);
}

void ScriptedChatProvider::set_handler(
    std::function<std::optional<std::string>(const std::string&)> handler) {
  std::lock_guard<std::mutex> lock(mutex_);
  handler_ = std::move(handler);
}

std::string ScriptedChatProvider::complete(const ModelConfig& cfg, const std::string& prompt) {
  (void)cfg;
  std::function<std::optional<std::string>(const std::string&)> handler;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    prompts_.push_back(prompt);
    handler = handler_;
  }
  if (handler) {
    // runs outside the lock so a handler may call back into the provider
    if (std::optional<std::string> reply = handler(prompt)) return *reply;
  }
  std::lock_guard<std::mutex> lock(mutex_);
  for (Rule& rule : rules_) {
    if (prompt.find(rule.contains) != std::string::npos) {
      const std::size_t index = std::min(rule.hits, rule.responses.size() - 1);
      ++rule.hits;
      return rule.responses[index];
    }
  }
  if (default_response_) return *default_response_;
  throw ProviderError(404, "no scripted response matches the prompt");
}

std::size_t ScriptedChatProvider::call_count() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return prompts_.size();
}

std::vector<std::string> ScriptedChatProvider::prompts() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return prompts_;
}

std::unique_ptr<ScriptedChatProvider> load_scripted_provider(const std::string& path) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(read_file(path));
  } catch (const std::exception& e) {
    throw ConfigError("script file '" + path + "': " + e.what());
  }
  auto provider = std::make_unique<ScriptedChatProvider>();
  if (root.contains("rules")) {
    if (!root["rules"].is_array()) throw ConfigError("script 'rules' must be an array");
    for (const auto& rule : root["rules"]) {
      if (!rule.contains("contains") || !rule["contains"].is_string()) {
        throw ConfigError("script rule needs a string 'contains'");
      }
      std::vector<std::string> responses;
      if (rule.contains("responses")) {
        for (const auto& r : rule["responses"]) responses.push_back(r.get<std::string>());
      } else if (rule.contains("response")) {
        responses.push_back(rule["response"].get<std::string>());
      }
      if (responses.empty()) {
        throw ConfigError("script rule needs 'response' or a non-empty 'responses'");
      }
      provider->add_rule(rule["contains"].get<std::string>(), std::move(responses));
    }
  }
  if (root.contains("default")) {
    provider->set_default_response(root["default"].get<std::string>());
  }
  return provider;
}

}  // namespace deckgen
