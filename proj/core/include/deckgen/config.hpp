#pragma once

#include <memory>
#include <optional>
#include <string>

#include "deckgen/embedder.hpp"
#include "deckgen/evaluator.hpp"
#include "deckgen/image_selector.hpp"
#include "deckgen/provider.hpp"
#include "deckgen/section_mapper.hpp"

namespace deckgen {

struct ProviderSpec {
  std::string kind = "http";  // http | scripted
  ModelConfig model;
  std::string script_path;  // scripted only
};

struct EmbedderSpec {
  std::string kind = "hash";  // hash | script | http
  std::size_t dimension = 256;
  std::string script_path;
  HttpEmbedderConfig http;
};

struct ScorerSpec {
  std::string kind = "uniform";  // uniform | http
  long vocab_size = 50257;
  HttpScorerConfig http;
};

struct PipelineSettings {
  int slides = 10;
  int max_bullets = 5;
  int summary_words = 150;
  MatchThresholds thresholds;
};

struct AppConfig {
  ProviderSpec provider;
  std::optional<ProviderSpec> judge;  // defaults to `provider` when absent
  EmbedderSpec embedder;
  ScorerSpec scorer;
  PipelineSettings pipeline;
  SelectorConfig selector;
  std::string cache_dir;
};

AppConfig load_config(const std::string& path);
AppConfig parse_config(const std::string& json_text);

// Canonical serialization of the effective config; the digest of this string
// is stamped into every generated deck.
std::string config_to_json(const AppConfig& config);
std::string config_digest(const AppConfig& config);

// Starter config written by --seed-config.
std::string example_config_json();

// Factories honoring the `kind` fields.
std::unique_ptr<ChatProvider> make_provider(const ProviderSpec& spec);
std::unique_ptr<JointEmbedder> make_embedder(const EmbedderSpec& spec);
std::unique_ptr<TokenScorer> make_scorer(const ScorerSpec& spec);

}  // namespace deckgen
