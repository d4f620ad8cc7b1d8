#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "deckgen/diagnostics.hpp"
#include "deckgen/document.hpp"
#include "deckgen/gateway.hpp"
#include "deckgen/outline.hpp"
#include "deckgen/section_mapper.hpp"

namespace deckgen {

enum class SlideFlag {
  Fallback,        // ungrounded slide written from the document summary
  WeakGrounding,   // grounded via the similarity fallback tier
  BulletOverflow,  // more bullets than requested even after the retry
  WordOverflow,    // a bullet longer than the word cap even after the retry
  Baseline,        // produced by a single-shot baseline
};

std::string to_string(SlideFlag flag);
std::optional<SlideFlag> slide_flag_from_string(const std::string& name);

struct SlideText {
  int index = 1;  // 1-based
  std::string title;
  std::vector<std::string> bullets;
  std::vector<std::string> source_section_ids;
  std::set<SlideFlag> flags;
};

// Bodies of the named sections (subtrees included) joined in document order,
// each block prefixed by its section title.
std::string concat_sections(const Document& doc, const std::vector<std::string>& ids);

// JSON list of dictionaries for the {previous_slide} slot; the first
// `degraded_to_title_only` slides carry their title only.
std::string serialize_previous_slides(const std::vector<SlideText>& previous,
                                      std::size_t degraded_to_title_only = 0);

struct WriterOptions {
  int max_bullets = 5;
  int max_words_per_bullet = 10;
};

// One provider call, plus exactly one corrective retry when the response is
// empty or violates the bullet/word caps. A persistently violating response
// is accepted with BulletOverflow/WordOverflow flags. Throws
// SlideGenerationFailed when no bullets can be parsed at all.
SlideText generate_slide(int index, const std::string& title, const std::string& source_text,
                         const std::vector<SlideText>& previous, Gateway& gateway,
                         const ModelConfig& cfg, const WriterOptions& options,
                         Diagnostics* diag = nullptr);

// Strictly sequential: slide k sees slides 1..k-1. When the serialized
// previous slides overflow the context budget, the oldest degrade to
// title-only until the prompt fits. Ungrounded slides use the document
// summary as their source and carry the Fallback flag.
std::vector<SlideText> write_deck_text(const Outline& outline, const SlideMapping& mapping,
                                       const Document& doc, const BirdsEyeView& bev,
                                       Gateway& gateway, const ModelConfig& cfg,
                                       const WriterOptions& options, Diagnostics* diag = nullptr);

}  // namespace deckgen
