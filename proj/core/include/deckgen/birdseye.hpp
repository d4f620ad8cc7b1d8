#pragma once

#include <string>
#include <utility>
#include <vector>

#include "deckgen/diagnostics.hpp"
#include "deckgen/document.hpp"
#include "deckgen/gateway.hpp"

namespace deckgen {

struct BirdsEyeEntry {
  std::string key;  // unique display title, see title_registry
  std::string section_id;
  std::string summary;
};

// Hierarchical summary of a document: one entry per section in document
// order, plus a whole-document summary built last.
struct BirdsEyeView {
  std::vector<BirdsEyeEntry> nodes;
  std::string document_summary;

  const BirdsEyeEntry* find(const std::string& key) const;
  std::vector<std::string> keys() const;
};

// Unique display keys for every section, pre-order. Repeated titles get
// " (2)", " (3)" suffixes; a suffix that itself collides keeps counting up.
std::vector<std::pair<std::string, std::string>> title_registry(const Document& doc);

struct SummaryOptions {
  int target_summary_words = 150;
};

// Leaf sections are summarized directly; bodies that do not fit the context
// budget are split on paragraph (never sentence) boundaries, each chunk
// summarized, and the chunk summaries reduced with one more call.
std::string summarize_leaf(const Section& section, Gateway& gateway, const ModelConfig& cfg,
                           const SummaryOptions& options);

// One call over the node's own body plus its children's summaries, ordered as
// the children appear.
std::string summarize_node(const Section& section, const std::vector<std::string>& child_summaries,
                           Gateway& gateway, const ModelConfig& cfg, const SummaryOptions& options);

// Post-order build: children before parents, document summary last.
// Partial results are discarded when any call fails.
BirdsEyeView build_birdseye(const Document& doc, Gateway& gateway, const ModelConfig& cfg,
                            const SummaryOptions& options, Diagnostics* diag = nullptr);

// "key: summary" lines, document order.
std::string serialize_birdseye(const BirdsEyeView& bev);

// Structured dump for --birdseye-out.
std::string birdseye_to_json(const BirdsEyeView& bev);

}  // namespace deckgen
