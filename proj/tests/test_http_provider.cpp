#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "deckgen/errors.hpp"
#include "deckgen/gateway.hpp"
#include "deckgen/http_provider.hpp"

using namespace deckgen;

namespace {

// Minimal chat-completions stand-in bound to an ephemeral port.
class LocalServer {
 public:
  explicit LocalServer(httplib::Server::Handler handler) {
    server_.Post("/v1/chat/completions", std::move(handler));
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LocalServer() {
    server_.stop();
    thread_.join();
  }
  int port() const { return port_; }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

std::string chat_body(const std::string& content) {
  nlohmann::json reply = {
      {"choices", {{{"message", {{"role", "assistant"}, {"content", content}}}}}}};
  return reply.dump();
}

ModelConfig model_for(int port) {
  ModelConfig cfg;
  cfg.provider_endpoint = "http://127.0.0.1:" + std::to_string(port) + "/v1/chat/completions";
  cfg.model_name = "test-model";
  cfg.temperature = 0.0;
  cfg.max_output_tokens = 64;
  cfg.context_budget_tokens = 4096;
  return cfg;
}

}  // namespace

TEST_SUITE("http_provider") {

TEST_CASE("split_endpoint") {
  const auto [base, path] = split_endpoint("http://host:1234/v1/chat/completions");
  CHECK(base == "http://host:1234");
  CHECK(path == "/v1/chat/completions");
  CHECK(split_endpoint("http://host:1234").second == "/");
  CHECK_THROWS_AS(split_endpoint("host/path"), ConfigError);
}

TEST_CASE("posts the chat-completions shape and reads the first choice") {
  std::string seen_body;
  std::string seen_auth;
  LocalServer server([&](const httplib::Request& req, httplib::Response& res) {
    seen_body = req.body;
    seen_auth = req.get_header_value("Authorization");
    res.set_content(chat_body("pong"), "application/json");
  });

  ::setenv("DECKGEN_TEST_KEY", "sekrit", 1);
  ModelConfig cfg = model_for(server.port());
  cfg.api_key_env = "DECKGEN_TEST_KEY";

  HttpChatProvider provider;
  CHECK(provider.complete(cfg, "ping") == "pong");
  CHECK(seen_auth == "Bearer sekrit");

  const nlohmann::json body = nlohmann::json::parse(seen_body);
  CHECK(body["model"] == "test-model");
  CHECK(body["messages"][0]["role"] == "user");
  CHECK(body["messages"][0]["content"] == "ping");
  CHECK(body["temperature"] == 0.0);
  CHECK(body["max_tokens"] == 64);
  ::unsetenv("DECKGEN_TEST_KEY");
}

TEST_CASE("configured but unset api key fails before any call") {
  ::unsetenv("DECKGEN_MISSING_KEY");
  std::atomic<int> hits{0};
  LocalServer server([&](const httplib::Request&, httplib::Response& res) {
    ++hits;
    res.set_content(chat_body("x"), "application/json");
  });
  ModelConfig cfg = model_for(server.port());
  cfg.api_key_env = "DECKGEN_MISSING_KEY";
  HttpChatProvider provider;
  try {
    provider.complete(cfg, "ping");
    FAIL("expected ProviderError");
  } catch (const ProviderError& e) {
    CHECK(e.status() == 401);
    CHECK(std::string(e.what()).find("DECKGEN_MISSING_KEY") != std::string::npos);
  }
  CHECK(hits == 0);
}

TEST_CASE("gateway retries 5xx then succeeds") {
  std::atomic<int> hits{0};
  LocalServer server([&](const httplib::Request&, httplib::Response& res) {
    const int n = ++hits;
    if (n <= 2) {
      res.status = 503;
      res.set_content("busy", "text/plain");
    } else {
      res.set_content(chat_body("finally"), "application/json");
    }
  });
  HttpChatProvider provider;
  GatewayOptions options;
  options.retry.base_delay_ms = 0;
  Gateway gateway(provider, options);
  CHECK(gateway.complete(model_for(server.port()), "p") == "finally");
  CHECK(hits == 3);
}

TEST_CASE("non-200 carries status and body") {
  LocalServer server([&](const httplib::Request&, httplib::Response& res) {
    res.status = 418;
    res.set_content("teapot", "text/plain");
  });
  HttpChatProvider provider;
  try {
    provider.complete(model_for(server.port()), "p");
    FAIL("expected ProviderError");
  } catch (const ProviderError& e) {
    CHECK(e.status() == 418);
    CHECK(e.body() == "teapot");
  }
}

TEST_CASE("unreachable endpoint is a transport failure") {
  ModelConfig cfg = model_for(1);  // nothing listens on port 1
  HttpChatProvider provider;
  try {
    provider.complete(cfg, "p");
    FAIL("expected ProviderError");
  } catch (const ProviderError& e) {
    CHECK(e.status() == 0);
  }
}

TEST_CASE("malformed completion body is not retryable") {
  std::atomic<int> hits{0};
  LocalServer server([&](const httplib::Request&, httplib::Response& res) {
    ++hits;
    res.set_content("{\"nope\": true}", "application/json");
  });
  HttpChatProvider provider;
  GatewayOptions options;
  options.retry.base_delay_ms = 0;
  Gateway gateway(provider, options);
  CHECK_THROWS_AS(gateway.complete(model_for(server.port()), "p"), ProviderError);
  CHECK(hits == 1);
}

}  // TEST_SUITE
