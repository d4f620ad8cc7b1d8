#include "deckgen/image_selector.hpp"

#include <algorithm>
#include <map>

#include "deckgen/errors.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

void validate_selector_config(const SelectorConfig& cfg) {
  if (!(cfg.aspect_min < cfg.aspect_max)) {
    throw ConfigError("aspect_min must be below aspect_max");
  }
  if (cfg.alpha_min < 0.0 || cfg.alpha_min > 1.0) {
    throw ConfigError("alpha_min must lie in [0, 1]");
  }
  if (cfg.min_dimension_px < 0) throw ConfigError("min_dimension_px must be >= 0");
  if (cfg.dedup_repeat_threshold < 2) {
    throw ConfigError("dedup_repeat_threshold must be >= 2");
  }
  if (cfg.proximity_page_slack < 0) throw ConfigError("proximity_page_slack must be >= 0");
}

namespace {

bool earlier_in_document(const Figure& a, const Figure& b) {
  if (a.position.page != b.position.page) return a.position.page < b.position.page;
  if (a.position.y0 != b.position.y0) return a.position.y0 < b.position.y0;
  return a.position.x0 < b.position.x0;
}

}  // namespace

std::vector<Figure> filter_candidates(const std::vector<Figure>& figures,
                                      const SelectorConfig& cfg) {
  validate_selector_config(cfg);

  std::vector<Figure> shape_ok;
  for (const Figure& figure : figures) {
    const double aspect = static_cast<double>(figure.width_px) / figure.height_px;
    if (aspect < cfg.aspect_min || aspect > cfg.aspect_max) continue;
    if (std::min(figure.width_px, figure.height_px) < cfg.min_dimension_px) continue;
    shape_ok.push_back(figure);
  }

  // duplicate rule over the survivors; empty hashes (unreadable files) are
  // treated as all-distinct
  std::map<std::string, int> hash_counts;
  for (const Figure& figure : shape_ok) {
    if (!figure.content_hash.empty()) ++hash_counts[figure.content_hash];
  }

  std::map<std::string, const Figure*> first_by_hash;
  for (const Figure& figure : shape_ok) {
    if (figure.content_hash.empty()) continue;
    auto [it, inserted] = first_by_hash.try_emplace(figure.content_hash, &figure);
    if (!inserted && earlier_in_document(figure, *it->second)) it->second = &figure;
  }

  std::vector<Figure> result;
  for (const Figure& figure : shape_ok) {
    if (figure.content_hash.empty()) {
      result.push_back(figure);
      continue;
    }
    const int count = hash_counts[figure.content_hash];
    if (count >= cfg.dedup_repeat_threshold) continue;  // logo rule
    if (count > 1 && first_by_hash[figure.content_hash]->id != figure.id) continue;
    result.push_back(figure);
  }
  return result;
}

std::vector<Figure> proximity_filter(const std::vector<Figure>& candidates,
                                     const std::vector<std::string>& contributing_ids,
                                     const Document& doc, const SelectorConfig& cfg) {
  if (contributing_ids.empty()) return {};
  const auto [span_min, span_max] = section_page_span(doc, contributing_ids);
  std::vector<Figure> result;
  for (const Figure& figure : candidates) {
    const int page = figure.position.page;
    if (page >= span_min && page <= span_max + cfg.proximity_page_slack) {
      result.push_back(figure);
    }
  }
  return result;
}

std::string slide_embedding_text(const SlideText& slide, const TextEmbedder& embedder) {
  std::string text = slide.title;
  for (const std::string& bullet : slide.bullets) {
    text += " " + bullet;
  }
  return text.substr(0, embedder.max_text_chars());
}

ScoredImage score_image(const Document& doc, const Figure& figure, const std::string& slide_text,
                        JointEmbedder& embedder) {
  const EmbeddingVector image = embedder.embed_image(resolve_image_path(doc, figure));
  const EmbeddingVector text = embedder.embed_text(slide_text);
  validate_embedding(image);
  validate_embedding(text);
  return ScoredImage{figure.id, cosine_similarity(image, text)};
}

std::optional<ScoredImage> select_image(const SlideText& slide, const MappingEntry& mapping_entry,
                                        const Document& doc, JointEmbedder& embedder,
                                        const SelectorConfig& cfg) {
  const std::vector<Figure> shaped = filter_candidates(doc.figures, cfg);
  const std::vector<Figure> nearby =
      proximity_filter(shaped, mapping_entry.section_ids, doc, cfg);
  if (nearby.empty()) return std::nullopt;

  // embed the slide text once, the images one by one
  const std::string text = slide_embedding_text(slide, embedder);
  const EmbeddingVector text_vec = embedder.embed_text(text);
  validate_embedding(text_vec);

  const Figure* best = nullptr;
  double best_alpha = 0.0;
  for (const Figure& figure : nearby) {
    const EmbeddingVector image_vec = embedder.embed_image(resolve_image_path(doc, figure));
    validate_embedding(image_vec);
    const double alpha = cosine_similarity(image_vec, text_vec);
    if (best == nullptr || alpha > best_alpha ||
        (alpha == best_alpha && earlier_in_document(figure, *best))) {
      best = &figure;
      best_alpha = alpha;
    }
  }
  if (best == nullptr || !(best_alpha > cfg.alpha_min)) return std::nullopt;
  return ScoredImage{best->id, best_alpha};
}

}  // namespace deckgen
