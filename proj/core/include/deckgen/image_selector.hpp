#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deckgen/document.hpp"
#include "deckgen/embedder.hpp"
#include "deckgen/section_mapper.hpp"
#include "deckgen/slide_writer.hpp"

namespace deckgen {

struct ScoredImage {
  std::string figure_id;
  double alpha = 0.0;  // cosine of image and slide-text embeddings
};

struct SelectorConfig {
  double alpha_min = 0.80;        // strict lower bound for placement
  double aspect_min = 0.25;       // width/height, inclusive bounds
  double aspect_max = 4.0;
  int min_dimension_px = 64;
  int dedup_repeat_threshold = 3; // this many identical images drops them all
  int proximity_page_slack = 1;
};

void validate_selector_config(const SelectorConfig& cfg);

// Drops bad aspect ratios and tiny images, then applies the duplicate rule:
// a content hash occurring dedup_repeat_threshold or more times vanishes
// entirely (logos, page furniture); a hash occurring twice keeps the earliest
// occurrence by document position.
std::vector<Figure> filter_candidates(const std::vector<Figure>& figures,
                                      const SelectorConfig& cfg);

// Keeps figures whose page lies in [span_min, span_max + slack] of the
// contributing sections. Ungrounded slides (no ids) yield no candidates.
std::vector<Figure> proximity_filter(const std::vector<Figure>& candidates,
                                     const std::vector<std::string>& contributing_ids,
                                     const Document& doc, const SelectorConfig& cfg);

// Joined title + bullets, clipped at the embedder's text limit.
std::string slide_embedding_text(const SlideText& slide, const TextEmbedder& embedder);

ScoredImage score_image(const Document& doc, const Figure& figure, const std::string& slide_text,
                        JointEmbedder& embedder);

// Argmax of alpha over figures surviving both filters, placed only when
// alpha strictly exceeds alpha_min. Exact ties resolve to the earliest
// document position (page, then y0, then x0).
std::optional<ScoredImage> select_image(const SlideText& slide, const MappingEntry& mapping_entry,
                                        const Document& doc, JointEmbedder& embedder,
                                        const SelectorConfig& cfg);

}  // namespace deckgen
