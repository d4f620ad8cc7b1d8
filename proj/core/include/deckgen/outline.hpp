#pragma once

#include <string>
#include <vector>

#include "deckgen/birdseye.hpp"
#include "deckgen/diagnostics.hpp"
#include "deckgen/gateway.hpp"

namespace deckgen {

// Ordered slide titles; the narrative skeleton of the deck.
struct Outline {
  std::vector<std::string> titles;
  std::size_t k() const { return titles.size(); }
};

// Backstop for over-long titles: more than 8 words truncates to the first 8
// plus an ellipsis (the prompt already asks for five-word headings).
std::string enforce_title_length(const std::string& title);

// Asks for k_target headings over the serialized bird's-eye view, then
// enforces title length, drops exact duplicates (keeping the first) and
// truncates to k_target. A short result is kept with a warning. One retry on
// an empty response, then OutlineGenerationFailed.
Outline generate_outline(const BirdsEyeView& bev, int k_target, Gateway& gateway,
                         const ModelConfig& cfg, Diagnostics* diag = nullptr);

std::string outline_to_json(const Outline& outline);
Outline outline_from_json(const std::string& json_text);

}  // namespace deckgen
