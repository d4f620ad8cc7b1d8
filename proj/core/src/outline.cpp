#include "deckgen/outline.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "deckgen/errors.hpp"
#include "deckgen/parsers.hpp"
#include "deckgen/prompts.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

std::string enforce_title_length(const std::string& title) {
  const std::vector<std::string> words = split_words(title);
  if (words.size() <= 8) return title;
  std::vector<std::string> head(words.begin(), words.begin() + 8);
  return join(head, " ") + "\xE2\x80\xA6";
}

Outline generate_outline(const BirdsEyeView& bev, int k_target, Gateway& gateway,
                         const ModelConfig& cfg, Diagnostics* diag) {
  if (k_target < 1) throw ConfigError("slide count must be >= 1");

  const std::string prompt = render(prompts::outline(),
                                    {{"text", serialize_birdseye(bev)},
                                     {"k", std::to_string(k_target)}});

  std::vector<std::string> items;
  for (int attempt = 0;; ++attempt) {
    const std::string response = gateway.complete(cfg, prompt, /*bypass_cache=*/attempt > 0);
    try {
      items = parse_numbered_list(response);
      break;
    } catch (const EmptyList&) {
      if (attempt >= 1) {
        throw OutlineGenerationFailed("provider returned no list items twice");
      }
    }
  }

  Outline outline;
  std::set<std::string> seen;
  for (const std::string& item : items) {
    const std::string title = enforce_title_length(trim(item));
    if (title.empty()) continue;
    if (!seen.insert(title).second) continue;  // exact repeat, keep first
    outline.titles.push_back(title);
  }
  if (outline.titles.size() > static_cast<std::size_t>(k_target)) {
    outline.titles.resize(static_cast<std::size_t>(k_target));
  }
  if (outline.titles.empty()) {
    throw OutlineGenerationFailed("no usable titles after deduplication");
  }
  if (outline.titles.size() < static_cast<std::size_t>(k_target)) {
    warn(diag, "outline is short: asked for " + std::to_string(k_target) + " titles, got " +
                   std::to_string(outline.titles.size()));
  }
  return outline;
}

std::string outline_to_json(const Outline& outline) {
  nlohmann::ordered_json root;
  root["titles"] = outline.titles;
  return root.dump(2) + "\n";
}

Outline outline_from_json(const std::string& json_text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("titles") || !root["titles"].is_array()) {
    throw SchemaError("titles", "expected an object with a 'titles' array");
  }
  Outline outline;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < root["titles"].size(); ++i) {
    const auto& v = root["titles"][i];
    if (!v.is_string()) throw SchemaError("titles[" + std::to_string(i) + "]", "expected a string");
    const std::string title = trim(v.get<std::string>());
    if (title.empty()) {
      throw SchemaError("titles[" + std::to_string(i) + "]", "title must be non-empty");
    }
    if (!seen.insert(title).second) {
      throw SchemaError("titles[" + std::to_string(i) + "]", "duplicate title '" + title + "'");
    }
    outline.titles.push_back(title);
  }
  if (outline.titles.empty()) throw SchemaError("titles", "outline must have at least one title");
  return outline;
}

}  // namespace deckgen
