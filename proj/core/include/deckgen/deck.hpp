#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "deckgen/document.hpp"
#include "deckgen/image_selector.hpp"
#include "deckgen/section_mapper.hpp"
#include "deckgen/slide_writer.hpp"

namespace deckgen {

struct SlideImage {
  std::string figure_id;
  std::string image_path;
  double alpha = 0.0;
};

struct SlideProvenance {
  std::vector<std::string> section_ids;
  std::vector<std::string> raw_keys;
  bool grounded = false;
  std::set<SlideFlag> flags;
};

struct Slide {
  int index = 1;  // contiguous 1..K
  std::string title;
  std::vector<std::string> bullets;
  std::optional<SlideImage> image;
  SlideProvenance provenance;
};

struct GeneratorInfo {
  std::string pipeline;
  std::string model_name;
  std::string config_digest;
};

struct Deck {
  std::string document_title;
  GeneratorInfo generator;
  std::vector<Slide> slides;
};

// Joins slide texts, per-slide image selections and mapping provenance into a
// deck. Throws LengthMismatch unless all three line up; image figure ids must
// resolve in the document.
Deck assemble(const std::vector<SlideText>& texts,
              const std::vector<std::optional<ScoredImage>>& images, const SlideMapping& mapping,
              const Document& doc, const GeneratorInfo& generator);

// Stable-key-order JSON; two emits of the same deck are byte-identical.
std::string emit_structured(const Deck& deck);
// Validating load; SchemaError names the offending path.
Deck load_structured(const std::string& json_text);

// One "## title" per slide, "- " bullets, image link, provenance HTML comment.
std::string emit_markdown(const Deck& deck);

}  // namespace deckgen
