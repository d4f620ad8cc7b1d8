#pragma once

#include <optional>
#include <string>

#include "deckgen/config.hpp"
#include "deckgen/deck.hpp"
#include "deckgen/diagnostics.hpp"
#include "deckgen/document.hpp"

namespace deckgen {

struct GenerateOptions {
  bool with_images = true;
  std::optional<Outline> injected_outline;  // skips outline generation
};

struct GenerateResult {
  Deck deck;
  BirdsEyeView birdseye;
  Outline outline;
  SlideMapping mapping;
};

// The staged path: bird's-eye view, outline, slide-to-section grounding,
// sequential slide text, image selection, assembly.
GenerateResult run_generate(const Document& doc, const AppConfig& config, ChatProvider& provider,
                            JointEmbedder* embedder, const GenerateOptions& options,
                            Diagnostics* diag = nullptr);

}  // namespace deckgen
