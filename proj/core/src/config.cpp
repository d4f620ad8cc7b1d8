#include "deckgen/config.hpp"

#include <nlohmann/json.hpp>

#include "deckgen/errors.hpp"
#include "deckgen/http_provider.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ModelConfig parse_model(const json& obj, const std::string& path) {
  ModelConfig model;
  if (obj.contains("endpoint")) model.provider_endpoint = obj["endpoint"].get<std::string>();
  if (obj.contains("model")) model.model_name = obj["model"].get<std::string>();
  if (obj.contains("temperature")) model.temperature = obj["temperature"].get<double>();
  if (obj.contains("max_output_tokens")) {
    model.max_output_tokens = obj["max_output_tokens"].get<long>();
  }
  if (obj.contains("context_budget_tokens")) {
    model.context_budget_tokens = obj["context_budget_tokens"].get<long>();
  }
  if (obj.contains("api_key_env")) model.api_key_env = obj["api_key_env"].get<std::string>();
  try {
    validate_model_config(model);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return model;
}

ProviderSpec parse_provider(const json& obj, const std::string& path) {
  ProviderSpec spec;
  if (obj.contains("kind")) spec.kind = obj["kind"].get<std::string>();
  if (spec.kind != "http" && spec.kind != "scripted") {
    throw ConfigError(path + ".kind must be 'http' or 'scripted'");
  }
  spec.model = parse_model(obj, path);
  if (obj.contains("script")) spec.script_path = obj["script"].get<std::string>();
  if (spec.kind == "scripted" && spec.script_path.empty()) {
    throw ConfigError(path + ": scripted provider needs a 'script' path");
  }
  if (spec.kind == "http" && spec.model.provider_endpoint.empty()) {
    throw ConfigError(path + ": http provider needs an 'endpoint'");
  }
  return spec;
}

}  // namespace

AppConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("expected a top-level object");

  AppConfig config;
  if (!root.contains("provider")) throw ConfigError("missing 'provider' section");
  config.provider = parse_provider(root["provider"], "provider");
  if (root.contains("judge")) {
    config.judge = parse_provider(root["judge"], "judge");
  }

  if (root.contains("embedder")) {
    const json& e = root["embedder"];
    if (e.contains("kind")) config.embedder.kind = e["kind"].get<std::string>();
    if (e.contains("dimension")) config.embedder.dimension = e["dimension"].get<std::size_t>();
    if (e.contains("script")) config.embedder.script_path = e["script"].get<std::string>();
    if (e.contains("endpoint")) config.embedder.http.endpoint = e["endpoint"].get<std::string>();
    if (e.contains("model")) config.embedder.http.model_name = e["model"].get<std::string>();
    if (e.contains("api_key_env")) {
      config.embedder.http.api_key_env = e["api_key_env"].get<std::string>();
    }
    if (e.contains("text_limit_chars")) {
      config.embedder.http.text_limit_chars = e["text_limit_chars"].get<std::size_t>();
    }
    config.embedder.http.dimension = config.embedder.dimension;
    if (config.embedder.kind != "hash" && config.embedder.kind != "script" &&
        config.embedder.kind != "http") {
      throw ConfigError("embedder.kind must be 'hash', 'script' or 'http'");
    }
    if (config.embedder.kind == "script" && config.embedder.script_path.empty()) {
      throw ConfigError("embedder: script kind needs a 'script' path");
    }
    if (config.embedder.kind == "http" && config.embedder.http.endpoint.empty()) {
      throw ConfigError("embedder: http kind needs an 'endpoint'");
    }
  }

  if (root.contains("scorer")) {
    const json& s = root["scorer"];
    if (s.contains("kind")) config.scorer.kind = s["kind"].get<std::string>();
    if (s.contains("vocab_size")) config.scorer.vocab_size = s["vocab_size"].get<long>();
    if (s.contains("endpoint")) config.scorer.http.endpoint = s["endpoint"].get<std::string>();
    if (s.contains("model")) config.scorer.http.model_name = s["model"].get<std::string>();
    if (s.contains("api_key_env")) {
      config.scorer.http.api_key_env = s["api_key_env"].get<std::string>();
    }
    if (config.scorer.kind != "uniform" && config.scorer.kind != "http") {
      throw ConfigError("scorer.kind must be 'uniform' or 'http'");
    }
    if (config.scorer.kind == "http" && config.scorer.http.endpoint.empty()) {
      throw ConfigError("scorer: http kind needs an 'endpoint'");
    }
  }

  if (root.contains("pipeline")) {
    const json& p = root["pipeline"];
    if (p.contains("slides")) config.pipeline.slides = p["slides"].get<int>();
    if (p.contains("max_bullets")) config.pipeline.max_bullets = p["max_bullets"].get<int>();
    if (p.contains("summary_words")) {
      config.pipeline.summary_words = p["summary_words"].get<int>();
    }
    if (p.contains("similarity_accept")) {
      config.pipeline.thresholds.accept = p["similarity_accept"].get<double>();
    }
    if (p.contains("similarity_fallback")) {
      config.pipeline.thresholds.fallback = p["similarity_fallback"].get<double>();
    }
    if (config.pipeline.slides < 1) throw ConfigError("pipeline.slides must be >= 1");
    if (config.pipeline.max_bullets < 1) throw ConfigError("pipeline.max_bullets must be >= 1");
  }

  if (root.contains("selector")) {
    const json& s = root["selector"];
    if (s.contains("alpha_min")) config.selector.alpha_min = s["alpha_min"].get<double>();
    if (s.contains("aspect_min")) config.selector.aspect_min = s["aspect_min"].get<double>();
    if (s.contains("aspect_max")) config.selector.aspect_max = s["aspect_max"].get<double>();
    if (s.contains("min_dimension_px")) {
      config.selector.min_dimension_px = s["min_dimension_px"].get<int>();
    }
    if (s.contains("dedup_repeat_threshold")) {
      config.selector.dedup_repeat_threshold = s["dedup_repeat_threshold"].get<int>();
    }
    if (s.contains("proximity_page_slack")) {
      config.selector.proximity_page_slack = s["proximity_page_slack"].get<int>();
    }
    validate_selector_config(config.selector);
  }

  if (root.contains("cache_dir")) config.cache_dir = root["cache_dir"].get<std::string>();
  return config;
}

AppConfig load_config(const std::string& path) {
  try {
    return parse_config(read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

namespace {

ordered_json provider_to_json(const ProviderSpec& spec) {
  return ordered_json{
      {"kind", spec.kind},
      {"endpoint", spec.model.provider_endpoint},
      {"model", spec.model.model_name},
      {"temperature", spec.model.temperature},
      {"max_output_tokens", spec.model.max_output_tokens},
      {"context_budget_tokens", spec.model.context_budget_tokens},
      {"api_key_env", spec.model.api_key_env},
      {"script", spec.script_path},
  };
}

}  // namespace

std::string config_to_json(const AppConfig& config) {
  ordered_json root;
  root["provider"] = provider_to_json(config.provider);
  if (config.judge) root["judge"] = provider_to_json(*config.judge);
  root["embedder"] = {
      {"kind", config.embedder.kind},
      {"dimension", config.embedder.dimension},
      {"script", config.embedder.script_path},
      {"endpoint", config.embedder.http.endpoint},
      {"model", config.embedder.http.model_name},
      {"api_key_env", config.embedder.http.api_key_env},
      {"text_limit_chars", config.embedder.http.text_limit_chars},
  };
  root["scorer"] = {
      {"kind", config.scorer.kind},
      {"vocab_size", config.scorer.vocab_size},
      {"endpoint", config.scorer.http.endpoint},
      {"model", config.scorer.http.model_name},
      {"api_key_env", config.scorer.http.api_key_env},
  };
  root["pipeline"] = {
      {"slides", config.pipeline.slides},
      {"max_bullets", config.pipeline.max_bullets},
      {"summary_words", config.pipeline.summary_words},
      {"similarity_accept", config.pipeline.thresholds.accept},
      {"similarity_fallback", config.pipeline.thresholds.fallback},
  };
  root["selector"] = {
      {"alpha_min", config.selector.alpha_min},
      {"aspect_min", config.selector.aspect_min},
      {"aspect_max", config.selector.aspect_max},
      {"min_dimension_px", config.selector.min_dimension_px},
      {"dedup_repeat_threshold", config.selector.dedup_repeat_threshold},
      {"proximity_page_slack", config.selector.proximity_page_slack},
  };
  root["cache_dir"] = config.cache_dir;
  return root.dump(2) + "\n";
}

std::string config_digest(const AppConfig& config) {
  return fnv1a64_hex(config_to_json(config));
}

std::string example_config_json() {
  ordered_json root;
  root["provider"] = {
      {"kind", "http"},
      {"endpoint", "http://localhost:8000/v1/chat/completions"},
      {"model", "gpt-3.5-turbo"},
      {"temperature", 0.0},
      {"max_output_tokens", 1024},
      {"context_budget_tokens", 16384},
      {"api_key_env", "DECKGEN_API_KEY"},
  };
  root["embedder"] = {
      {"kind", "hash"},
      {"dimension", 256},
  };
  root["scorer"] = {
      {"kind", "uniform"},
      {"vocab_size", 50257},
  };
  root["pipeline"] = {
      {"slides", 10},
      {"max_bullets", 5},
      {"summary_words", 150},
      {"similarity_accept", 0.90},
      {"similarity_fallback", 0.50},
  };
  root["selector"] = {
      {"alpha_min", 0.80},
      {"aspect_min", 0.25},
      {"aspect_max", 4.0},
      {"min_dimension_px", 64},
      {"dedup_repeat_threshold", 3},
      {"proximity_page_slack", 1},
  };
  root["cache_dir"] = ".deckgen-cache";
  return root.dump(2) + "\n";
}

std::unique_ptr<ChatProvider> make_provider(const ProviderSpec& spec) {
  if (spec.kind == "scripted") {
    return load_scripted_provider(spec.script_path);
  }
  return std::make_unique<HttpChatProvider>();
}

std::unique_ptr<JointEmbedder> make_embedder(const EmbedderSpec& spec) {
  if (spec.kind == "script") {
    return std::make_unique<ScriptedEmbedder>(load_scripted_embedder(spec.script_path));
  }
  if (spec.kind == "http") {
    return std::make_unique<HttpEmbedder>(spec.http);
  }
  return std::make_unique<HashEmbedder>(spec.dimension);
}

std::unique_ptr<TokenScorer> make_scorer(const ScorerSpec& spec) {
  if (spec.kind == "http") {
    return std::make_unique<HttpScorer>(spec.http);
  }
  return std::make_unique<UniformScorer>(spec.vocab_size);
}

}  // namespace deckgen
