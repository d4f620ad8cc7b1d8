#include "deckgen/http_provider.hpp"

#include <cstdlib>

#ifdef DECKGEN_HTTPS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "deckgen/errors.hpp"

namespace deckgen {

std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
  const std::size_t scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("provider endpoint must start with http:// or https://: " + endpoint);
  }
  const std::size_t path_start = endpoint.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {endpoint, "/"};
  return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

std::string resolve_api_key(const ModelConfig& cfg) {
  if (cfg.api_key_env.empty()) return "";
  const char* value = std::getenv(cfg.api_key_env.c_str());
  if (value == nullptr || *value == '\0') {
    throw ProviderError(401, "environment variable " + cfg.api_key_env +
                                 " is not set; export it or clear api_key_env in the config");
  }
  return value;
}

std::string HttpChatProvider::complete(const ModelConfig& cfg, const std::string& prompt) {
  const std::string api_key = resolve_api_key(cfg);
  const auto [base, path] = split_endpoint(cfg.provider_endpoint);

  httplib::Client client(base);
  client.set_connection_timeout(timeout_sec_, 0);
  client.set_read_timeout(timeout_sec_, 0);
  client.set_write_timeout(timeout_sec_, 0);

  httplib::Headers headers;
  if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);

  nlohmann::json body = {
      {"model", cfg.model_name},
      {"messages", nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
      {"temperature", cfg.temperature},
      {"max_tokens", cfg.max_output_tokens},
  };

  httplib::Result result = client.Post(path, headers, body.dump(), "application/json");
  if (!result) {
    throw ProviderError(0, "transport failure: " + httplib::to_string(result.error()));
  }
  if (result->status != 200) {
    throw ProviderError(result->status, result->body);
  }
  try {
    nlohmann::json reply = nlohmann::json::parse(result->body);
    return reply.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const std::exception& e) {
    throw ProviderError(200, std::string("malformed completion body: ") + e.what());
  }
}

}  // namespace deckgen
