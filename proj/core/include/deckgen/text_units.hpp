#pragma once

#include <string>
#include <vector>

#include "deckgen/document.hpp"

namespace deckgen {

// Blank-line separated blocks over every section body, document order.
std::vector<std::string> split_paragraphs(const Document& doc);

// Rule-based splitter: a terminator followed by whitespace and an uppercase
// letter or digit ends a sentence, unless the preceding token is a known
// abbreviation ("Dr.", "e.g.", "Fig.", ...).
std::vector<std::string> split_sentences(const std::string& text);

}  // namespace deckgen
