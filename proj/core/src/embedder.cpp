#include "deckgen/embedder.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>

#ifdef DECKGEN_HTTPS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "deckgen/errors.hpp"
#include "deckgen/http_provider.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

void validate_embedding(const EmbeddingVector& v) {
  for (double x : v.values) {
    if (!std::isfinite(x)) throw EmbedderError("embedding contains a non-finite value");
  }
}

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    dot += a.values[i] * b.values[i];
    norm_a += a.values[i] * a.values[i];
    norm_b += b.values[i] * b.values[i];
  }
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

namespace {

void l2_normalize(std::vector<double>& values) {
  double norm = 0.0;
  for (double x : values) norm += x * x;
  if (norm == 0.0) {
    if (!values.empty()) values[0] = 1.0;
    return;
  }
  norm = std::sqrt(norm);
  for (double& x : values) x /= norm;
}

void hash_into(std::vector<double>& acc, std::string_view token) {
  const std::uint64_t h = fnv1a64(token);
  const std::size_t bucket = static_cast<std::size_t>(h % acc.size());
  acc[bucket] += (h >> 63) ? -1.0 : 1.0;
}

}  // namespace

HashEmbedder::HashEmbedder(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) throw ConfigError("embedder dimension must be positive");
}

EmbeddingVector HashEmbedder::embed_text(const std::string& text) {
  std::vector<double> acc(dimension_, 0.0);
  for (const std::string& word : split_words(to_lower(text))) {
    hash_into(acc, word);
  }
  l2_normalize(acc);
  return EmbeddingVector{std::move(acc)};
}

EmbeddingVector HashEmbedder::embed_image(const std::string& image_path) {
  std::string bytes;
  try {
    bytes = read_file(image_path);
  } catch (const std::exception& e) {
    throw EmbedderError(e.what());
  }
  std::vector<double> acc(dimension_, 0.0);
  for (std::size_t off = 0; off < bytes.size(); off += 8) {
    hash_into(acc, std::string_view(bytes).substr(off, 8));
  }
  hash_into(acc, "size:" + std::to_string(bytes.size()));
  l2_normalize(acc);
  return EmbeddingVector{std::move(acc)};
}

ScriptedEmbedder::ScriptedEmbedder(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) throw ConfigError("embedder dimension must be positive");
}

void ScriptedEmbedder::set_text(const std::string& text, std::vector<double> values) {
  texts_[text] = std::move(values);
}

void ScriptedEmbedder::set_image(const std::string& path_or_basename, std::vector<double> values) {
  images_[path_or_basename] = std::move(values);
}

void ScriptedEmbedder::set_default(std::vector<double> values) {
  default_ = std::move(values);
  has_default_ = true;
}

EmbeddingVector ScriptedEmbedder::checked(const std::vector<double>& values) const {
  if (values.size() != dimension_) throw DimensionMismatch(values.size(), dimension_);
  EmbeddingVector v{values};
  validate_embedding(v);
  return v;
}

EmbeddingVector ScriptedEmbedder::embed_text(const std::string& text) {
  if (auto it = texts_.find(text); it != texts_.end()) return checked(it->second);
  if (has_default_) return checked(default_);
  throw EmbedderError("no scripted embedding for text: " + text.substr(0, 80));
}

EmbeddingVector ScriptedEmbedder::embed_image(const std::string& image_path) {
  if (auto it = images_.find(image_path); it != images_.end()) return checked(it->second);
  const std::string basename = std::filesystem::path(image_path).filename().string();
  if (auto it = images_.find(basename); it != images_.end()) return checked(it->second);
  if (has_default_) return checked(default_);
  throw EmbedderError("no scripted embedding for image: " + image_path);
}

ScriptedEmbedder load_scripted_embedder(const std::string& path) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(read_file(path));
  } catch (const std::exception& e) {
    throw ConfigError("embedder script '" + path + "': " + e.what());
  }
  if (!root.contains("dimension") || !root["dimension"].is_number_unsigned()) {
    throw ConfigError("embedder script needs an unsigned 'dimension'");
  }
  ScriptedEmbedder embedder(root["dimension"].get<std::size_t>());
  if (root.contains("texts")) {
    for (const auto& [text, values] : root["texts"].items()) {
      embedder.set_text(text, values.get<std::vector<double>>());
    }
  }
  if (root.contains("images")) {
    for (const auto& [key, values] : root["images"].items()) {
      embedder.set_image(key, values.get<std::vector<double>>());
    }
  }
  if (root.contains("default")) {
    embedder.set_default(root["default"].get<std::vector<double>>());
  }
  return embedder;
}

HttpEmbedder::HttpEmbedder(HttpEmbedderConfig config) : config_(std::move(config)) {}

EmbeddingVector HttpEmbedder::post(const std::string& payload) {
  const auto [base, path] = split_endpoint(config_.endpoint);
  httplib::Client client(base);
  client.set_connection_timeout(config_.timeout_sec, 0);
  client.set_read_timeout(config_.timeout_sec, 0);

  httplib::Headers headers;
  if (!config_.api_key_env.empty()) {
    const char* value = std::getenv(config_.api_key_env.c_str());
    if (value == nullptr || *value == '\0') {
      throw EmbedderError("environment variable " + config_.api_key_env + " is not set");
    }
    headers.emplace("Authorization", std::string("Bearer ") + value);
  }

  httplib::Result result = client.Post(path, headers, payload, "application/json");
  if (!result) throw EmbedderError("transport failure: " + httplib::to_string(result.error()));
  if (result->status != 200) {
    throw EmbedderError("status " + std::to_string(result->status) + ": " + result->body);
  }
  try {
    nlohmann::json reply = nlohmann::json::parse(result->body);
    EmbeddingVector v{reply.at("data").at(0).at("embedding").get<std::vector<double>>()};
    validate_embedding(v);
    if (config_.dimension == 0) config_.dimension = v.dimension();
    if (v.dimension() != config_.dimension) {
      throw DimensionMismatch(v.dimension(), config_.dimension);
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw EmbedderError(std::string("malformed embedding body: ") + e.what());
  }
}

EmbeddingVector HttpEmbedder::embed_text(const std::string& text) {
  const std::string clipped = text.substr(0, config_.text_limit_chars);
  nlohmann::json body = {{"model", config_.model_name}, {"input", clipped}};
  return post(body.dump());
}

EmbeddingVector HttpEmbedder::embed_image(const std::string& image_path) {
  std::string bytes;
  try {
    bytes = read_file(image_path);
  } catch (const std::exception& e) {
    throw EmbedderError(e.what());
  }
  nlohmann::json body = {{"model", config_.model_name},
                         {"input_image_b64", base64_encode(bytes)}};
  return post(body.dump());
}

std::string base64_encode(std::string_view bytes) {
  static constexpr char kAlphabet[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  while (i + 2 < bytes.size()) {
    const unsigned v = (static_cast<unsigned char>(bytes[i]) << 16) |
                       (static_cast<unsigned char>(bytes[i + 1]) << 8) |
                       static_cast<unsigned char>(bytes[i + 2]);
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back(kAlphabet[(v >> 6) & 63]);
    out.push_back(kAlphabet[v & 63]);
    i += 3;
  }
  if (i + 1 == bytes.size()) {
    const unsigned v = static_cast<unsigned char>(bytes[i]) << 16;
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out += "==";
  } else if (i + 2 == bytes.size()) {
    const unsigned v = (static_cast<unsigned char>(bytes[i]) << 16) |
                       (static_cast<unsigned char>(bytes[i + 1]) << 8);
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back(kAlphabet[(v >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

}  // namespace deckgen
