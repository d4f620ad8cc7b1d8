#include "deckgen/baselines.hpp"

#include "deckgen/errors.hpp"
#include "deckgen/parsers.hpp"
#include "deckgen/prompts.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

std::string to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::Flat: return "flat";
    case BaselineKind::Cot: return "cot";
    case BaselineKind::Cons: return "cons";
  }
  return "unknown";
}

BaselineKind baseline_kind_from_string(const std::string& name) {
  if (name == "flat") return BaselineKind::Flat;
  if (name == "cot") return BaselineKind::Cot;
  if (name == "cons") return BaselineKind::Cons;
  throw ConfigError("unknown baseline kind '" + name + "' (expected flat, cot or cons)");
}

std::string serialize_document(const Document& doc) {
  std::vector<std::string> blocks;
  for (const FlatSection& section : flatten_sections(doc)) {
    const std::string body = trim(section.body);
    blocks.push_back(body.empty() ? section.title : section.title + "\n" + body);
  }
  return join(blocks, "\n\n");
}

namespace {

const PromptTemplate& template_for(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::Flat: return prompts::baseline_flat();
    case BaselineKind::Cot: return prompts::baseline_cot();
    case BaselineKind::Cons: return prompts::baseline_cons();
  }
  return prompts::baseline_flat();
}

}  // namespace

Deck run_baseline(BaselineKind kind, const Document& doc, int slide_count, Gateway& gateway,
                  const ModelConfig& cfg, const std::string& config_digest, Diagnostics* diag) {
  if (slide_count < 1) throw ConfigError("slide count must be >= 1");

  const std::string prompt = render(template_for(kind),
                                    {{"number_of_slides", std::to_string(slide_count)},
                                     {"document", serialize_document(doc)}});
  const std::string response = gateway.complete(cfg, prompt);

  const std::vector<SlideBlock> blocks = parse_slide_blocks(response);

  Deck deck;
  deck.document_title = doc.title;
  deck.generator = GeneratorInfo{"baseline-" + to_string(kind), cfg.model_name, config_digest};
  for (const SlideBlock& block : blocks) {
    if (block.bullets.empty()) {
      warn(diag, "baseline slide '" + block.title + "' has no bullets, dropped");
      continue;
    }
    Slide slide;
    slide.index = static_cast<int>(deck.slides.size()) + 1;
    slide.title = block.title;
    slide.bullets = block.bullets;
    slide.provenance.grounded = false;
    slide.provenance.flags.insert(SlideFlag::Baseline);
    deck.slides.push_back(std::move(slide));
  }
  if (deck.slides.empty()) throw ParseFailure("no usable slide block in the baseline response");
  if (static_cast<int>(deck.slides.size()) != slide_count) {
    warn(diag, "baseline returned " + std::to_string(deck.slides.size()) + " slides, asked for " +
                   std::to_string(slide_count));
  }
  return deck;
}

}  // namespace deckgen
