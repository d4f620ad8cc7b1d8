#include "deckgen/section_mapper.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "deckgen/errors.hpp"
#include "deckgen/parsers.hpp"
#include "deckgen/prompts.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
  if (a.size() > b.size()) std::swap(a, b);
  const std::size_t short_len = a.size();
  const std::size_t long_len = b.size();

  std::vector<std::size_t> row(short_len + 1);
  std::iota(row.begin(), row.end(), 0);

  for (std::size_t j = 1; j <= long_len; ++j) {
    std::size_t diagonal = row[0];
    row[0] = j;
    for (std::size_t i = 1; i <= short_len; ++i) {
      const std::size_t saved = row[i];
      if (a[i - 1] == b[j - 1]) {
        row[i] = diagonal;
      } else {
        row[i] = std::min({row[i - 1], row[i], diagonal}) + 1;
      }
      diagonal = saved;
    }
  }
  return row[short_len];
}

namespace {

std::string normalize_for_match(std::string_view text) {
  return collapse_whitespace(strip_punctuation(to_lower(text)));
}

}  // namespace

double normalized_similarity(std::string_view a, std::string_view b) {
  const std::string na = normalize_for_match(a);
  const std::string nb = normalize_for_match(b);
  const std::size_t longest = std::max(na.size(), nb.size());
  if (longest == 0) return 1.0;
  const std::size_t distance = levenshtein_distance(na, nb);
  return 1.0 - static_cast<double>(distance) / static_cast<double>(longest);
}

namespace {

std::string serialize_key_list(const BirdsEyeView& bev) {
  nlohmann::ordered_json keys = nlohmann::ordered_json::array();
  for (const BirdsEyeEntry& node : bev.nodes) keys.push_back(node.key);
  return keys.dump();
}

std::string serialize_key_dict(const BirdsEyeView& bev) {
  nlohmann::ordered_json dict = nlohmann::ordered_json::object();
  for (const BirdsEyeEntry& node : bev.nodes) dict[node.key] = node.summary;
  return dict.dump(2);
}

struct KeyMatch {
  std::size_t raw_index = 0;
  const BirdsEyeEntry* entry = nullptr;
  double similarity = 0.0;
};

}  // namespace

MappingEntry map_slide(int slide_index, const std::string& title, const BirdsEyeView& bev,
                       const Document& doc, Gateway& gateway, const ModelConfig& cfg,
                       const MatchThresholds& thresholds, Diagnostics* diag) {
  (void)doc;
  MappingEntry entry;
  entry.slide_index = slide_index;
  entry.slide_title = title;

  const std::string prompt =
      render(prompts::map_slide(), {{"outline_headings", title},
                                    {"document_heading_from_bird_eye_view", serialize_key_list(bev)},
                                    {"bird_eye_view", serialize_key_dict(bev)}});
  const std::string response = gateway.complete(cfg, prompt);

  std::vector<std::string> raw_keys;
  try {
    raw_keys = parse_matched_keys(response);
  } catch (const EmptyList&) {
    warn(diag, "slide " + std::to_string(slide_index) + " ('" + title +
                   "'): empty mapping response, slide left ungrounded");
    return entry;
  }
  entry.raw_keys = raw_keys;

  std::vector<KeyMatch> matches;
  for (std::size_t i = 0; i < raw_keys.size(); ++i) {
    KeyMatch best;
    best.raw_index = i;
    for (const BirdsEyeEntry& node : bev.nodes) {
      const double sim = normalized_similarity(raw_keys[i], node.key);
      if (best.entry == nullptr || sim > best.similarity) {
        best.entry = &node;
        best.similarity = sim;
      }
    }
    entry.best_similarities.push_back(best.similarity);
    matches.push_back(best);
  }

  std::vector<KeyMatch> accepted;
  for (const KeyMatch& m : matches) {
    if (m.similarity > thresholds.accept) accepted.push_back(m);
  }
  std::stable_sort(accepted.begin(), accepted.end(),
                   [](const KeyMatch& a, const KeyMatch& b) { return a.similarity > b.similarity; });
  if (accepted.size() > 2) accepted.resize(2);

  if (accepted.empty() && !matches.empty()) {
    const KeyMatch best = *std::max_element(
        matches.begin(), matches.end(),
        [](const KeyMatch& a, const KeyMatch& b) { return a.similarity < b.similarity; });
    if (best.similarity >= thresholds.fallback) {
      accepted.push_back(best);
      entry.fallback = true;
      warn(diag, "slide " + std::to_string(slide_index) + " ('" + title +
                     "'): weak grounding to '" + best.entry->key + "' at similarity " +
                     std::to_string(best.similarity));
    }
  }

  for (const KeyMatch& m : accepted) {
    const std::string& id = m.entry->section_id;
    if (std::find(entry.section_ids.begin(), entry.section_ids.end(), id) ==
        entry.section_ids.end()) {
      entry.section_ids.push_back(id);
    }
  }
  entry.grounded = !entry.section_ids.empty();
  if (!entry.grounded) {
    warn(diag, "slide " + std::to_string(slide_index) + " ('" + title +
                   "'): no key matched any section title, slide left ungrounded");
  }
  return entry;
}

SlideMapping build_mapping(const Outline& outline, const BirdsEyeView& bev, const Document& doc,
                           Gateway& gateway, const ModelConfig& cfg,
                           const MatchThresholds& thresholds, Diagnostics* diag) {
  SlideMapping mapping;
  for (std::size_t i = 0; i < outline.titles.size(); ++i) {
    mapping.entries.push_back(map_slide(static_cast<int>(i) + 1, outline.titles[i], bev, doc,
                                        gateway, cfg, thresholds, diag));
  }
  return mapping;
}

std::string mapping_to_json(const SlideMapping& mapping) {
  nlohmann::ordered_json root;
  root["entries"] = nlohmann::ordered_json::array();
  for (const MappingEntry& entry : mapping.entries) {
    root["entries"].push_back({
        {"slide_index", entry.slide_index},
        {"slide_title", entry.slide_title},
        {"section_ids", entry.section_ids},
        {"grounded", entry.grounded},
        {"fallback", entry.fallback},
        {"raw_keys", entry.raw_keys},
        {"best_similarities", entry.best_similarities},
    });
  }
  return root.dump(2) + "\n";
}

}  // namespace deckgen
