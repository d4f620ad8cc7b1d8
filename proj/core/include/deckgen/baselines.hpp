#pragma once

#include <string>

#include "deckgen/deck.hpp"
#include "deckgen/diagnostics.hpp"
#include "deckgen/document.hpp"
#include "deckgen/gateway.hpp"

namespace deckgen {

enum class BaselineKind { Flat, Cot, Cons };

std::string to_string(BaselineKind kind);
// Throws ConfigError for anything but "flat", "cot", "cons".
BaselineKind baseline_kind_from_string(const std::string& name);

// Section headings followed by their bodies, pre-order, plain text.
std::string serialize_document(const Document& doc);

// One provider call with the whole document in the prompt, parsed into a deck
// with empty provenance and the Baseline flag. No image stage. Throws
// ContextOverflow when the document does not fit, ParseFailure when no slide
// block is recognized.
Deck run_baseline(BaselineKind kind, const Document& doc, int slide_count, Gateway& gateway,
                  const ModelConfig& cfg, const std::string& config_digest,
                  Diagnostics* diag = nullptr);

}  // namespace deckgen
