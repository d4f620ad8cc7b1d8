#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "deckgen/birdseye.hpp"
#include "deckgen/diagnostics.hpp"
#include "deckgen/document.hpp"
#include "deckgen/gateway.hpp"
#include "deckgen/outline.hpp"

namespace deckgen {

std::size_t levenshtein_distance(std::string_view a, std::string_view b);

// 1 - distance / max(len) over case-folded, whitespace-collapsed,
// punctuation-stripped copies. 1.0 when both normalize to empty.
double normalized_similarity(std::string_view a, std::string_view b);

struct MatchThresholds {
  double accept = 0.90;    // strict: similarity must exceed this
  double fallback = 0.50;  // weak tier used when nothing clears accept
};

struct MappingEntry {
  int slide_index = 1;
  std::string slide_title;
  std::vector<std::string> section_ids;  // 1-2 ids when grounded, else empty
  bool grounded = false;
  bool fallback = false;  // grounded via the weak tier
  std::vector<std::string> raw_keys;            // the model's verbatim keys
  std::vector<double> best_similarities;        // best match per raw key
};

struct SlideMapping {
  std::vector<MappingEntry> entries;
};

// Asks the model for 1-2 matching bird's-eye keys, then grounds each raw key
// to the best-matching section title. Keys above the accept threshold win (at
// most two, highest first); otherwise the single best key at or above the
// fallback tier is taken with a warning; otherwise the slide stays ungrounded.
// Never fails on unmatched keys.
MappingEntry map_slide(int slide_index, const std::string& title, const BirdsEyeView& bev,
                       const Document& doc, Gateway& gateway, const ModelConfig& cfg,
                       const MatchThresholds& thresholds, Diagnostics* diag = nullptr);

SlideMapping build_mapping(const Outline& outline, const BirdsEyeView& bev, const Document& doc,
                           Gateway& gateway, const ModelConfig& cfg,
                           const MatchThresholds& thresholds, Diagnostics* diag = nullptr);

std::string mapping_to_json(const SlideMapping& mapping);

}  // namespace deckgen
