#include "deckgen/birdseye.hpp"

#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "deckgen/errors.hpp"
#include "deckgen/prompts.hpp"
#include "deckgen/text_units.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

const BirdsEyeEntry* BirdsEyeView::find(const std::string& key) const {
  for (const BirdsEyeEntry& node : nodes) {
    if (node.key == key) return &node;
  }
  return nullptr;
}

std::vector<std::string> BirdsEyeView::keys() const {
  std::vector<std::string> out;
  out.reserve(nodes.size());
  for (const BirdsEyeEntry& node : nodes) out.push_back(node.key);
  return out;
}

std::vector<std::pair<std::string, std::string>> title_registry(const Document& doc) {
  std::vector<std::pair<std::string, std::string>> registry;
  std::set<std::string> used;
  std::map<std::string, int> occurrences;
  for (const FlatSection& section : flatten_sections(doc)) {
    int count = ++occurrences[section.title];
    std::string key = section.title;
    while (count > 1 || used.count(key)) {
      key = section.title + " (" + std::to_string(count) + ")";
      if (!used.count(key)) break;
      ++count;
    }
    used.insert(key);
    registry.emplace_back(key, section.id);
  }
  return registry;
}

namespace {

// Budget left for the {text} slot of the summarize prompt, in estimated tokens.
long text_token_budget(const ModelConfig& cfg, const SummaryOptions& options) {
  const std::string shell =
      render(prompts::summarize(),
             {{"n", std::to_string(options.target_summary_words)}, {"text", ""}});
  const long overhead = estimate_tokens(shell) + 16;
  return cfg.context_budget_tokens - cfg.max_output_tokens - overhead;
}

std::string call_summarize(const std::string& text, Gateway& gateway, const ModelConfig& cfg,
                           const SummaryOptions& options) {
  const std::string prompt =
      render(prompts::summarize(),
             {{"n", std::to_string(options.target_summary_words)}, {"text", text}});
  return gateway.complete(cfg, prompt);
}

// Packs paragraphs greedily into chunks whose token estimate stays within
// budget; an oversized paragraph is split on sentence boundaries first and
// only then, as a last resort, on a raw character boundary.
std::vector<std::string> chunk_text(const std::string& text, long budget_tokens) {
  const long budget_chars = budget_tokens * 4;
  std::vector<std::string> pieces;
  for (const std::string& paragraph : split_blank_line_blocks(text)) {
    if (estimate_tokens(paragraph) <= budget_tokens) {
      pieces.push_back(paragraph);
      continue;
    }
    for (const std::string& sentence : split_sentences(paragraph)) {
      if (estimate_tokens(sentence) <= budget_tokens) {
        pieces.push_back(sentence);
      } else {
        for (std::size_t off = 0; off < sentence.size();
             off += static_cast<std::size_t>(budget_chars)) {
          pieces.push_back(sentence.substr(off, static_cast<std::size_t>(budget_chars)));
        }
      }
    }
  }

  std::vector<std::string> chunks;
  std::string current;
  for (const std::string& piece : pieces) {
    const std::string joined = current.empty() ? piece : current + "\n\n" + piece;
    if (!current.empty() && estimate_tokens(joined) > budget_tokens) {
      chunks.push_back(current);
      current = piece;
    } else {
      current = joined;
    }
  }
  if (!current.empty()) chunks.push_back(current);
  return chunks;
}

// Map-reduce summarization of free text within the model's budget.
std::string summarize_text(const std::string& text, Gateway& gateway, const ModelConfig& cfg,
                           const SummaryOptions& options) {
  const long budget = text_token_budget(cfg, options);
  if (estimate_tokens(text) <= budget) {
    return call_summarize(text, gateway, cfg, options);
  }
  const std::vector<std::string> chunks = chunk_text(text, budget);
  std::vector<std::string> partials;
  partials.reserve(chunks.size());
  for (const std::string& chunk : chunks) {
    partials.push_back(call_summarize(chunk, gateway, cfg, options));
  }
  return call_summarize(join(partials, "\n\n"), gateway, cfg, options);
}

std::string non_empty_or(const std::string& summary, const std::string& fallback,
                         Diagnostics* diag, const std::string& what) {
  if (!trim(summary).empty()) return summary;
  warn(diag, what + ": provider returned an empty summary, using the title instead");
  return fallback;
}

}  // namespace

std::string summarize_leaf(const Section& section, Gateway& gateway, const ModelConfig& cfg,
                           const SummaryOptions& options) {
  if (trim(section.body).empty()) {
    return section.title;  // no provider call for empty bodies
  }
  return summarize_text(section.body, gateway, cfg, options);
}

std::string summarize_node(const Section& section, const std::vector<std::string>& child_summaries,
                           Gateway& gateway, const ModelConfig& cfg, const SummaryOptions& options) {
  const long budget = text_token_budget(cfg, options);
  std::string own_body = trim(section.body);
  std::string composed;
  if (!own_body.empty()) composed = own_body;
  for (const std::string& child : child_summaries) {
    if (!composed.empty()) composed += "\n\n";
    composed += child;
  }
  if (composed.empty()) return section.title;
  if (estimate_tokens(composed) > budget && !own_body.empty()) {
    // the body is the oversized part; reduce it first, keep one final call
    own_body = summarize_text(own_body, gateway, cfg, options);
    composed = own_body;
    for (const std::string& child : child_summaries) {
      composed += "\n\n" + child;
    }
  }
  return call_summarize(composed, gateway, cfg, options);
}

namespace {

// Post-order: every child's summary exists before its parent's call is made.
std::string build_node(const Section& section, Gateway& gateway, const ModelConfig& cfg,
                       const SummaryOptions& options, Diagnostics* diag,
                       std::map<std::string, std::string>& by_id) {
  std::vector<std::string> child_summaries;
  for (const Section& child : section.children) {
    child_summaries.push_back(build_node(child, gateway, cfg, options, diag, by_id));
  }
  std::string summary;
  if (section.is_leaf()) {
    summary = summarize_leaf(section, gateway, cfg, options);
  } else {
    summary = summarize_node(section, child_summaries, gateway, cfg, options);
  }
  summary = non_empty_or(summary, section.title, diag, "section '" + section.title + "'");
  by_id[section.id] = summary;
  return summary;
}

}  // namespace

BirdsEyeView build_birdseye(const Document& doc, Gateway& gateway, const ModelConfig& cfg,
                            const SummaryOptions& options, Diagnostics* diag) {
  std::map<std::string, std::string> by_id;
  std::vector<std::string> top_level;
  for (const Section& root : doc.sections) {
    const std::string root_summary = build_node(root, gateway, cfg, options, diag, by_id);
    top_level.push_back(root.title + ": " + root_summary);
  }

  BirdsEyeView bev;
  for (const auto& [key, id] : title_registry(doc)) {
    bev.nodes.push_back(BirdsEyeEntry{key, id, by_id.at(id)});
  }
  const std::string doc_summary =
      summarize_text(join(top_level, "\n\n"), gateway, cfg, options);
  bev.document_summary =
      non_empty_or(doc_summary, doc.title, diag, "document summary");
  return bev;
}

std::string serialize_birdseye(const BirdsEyeView& bev) {
  std::vector<std::string> lines;
  lines.reserve(bev.nodes.size());
  for (const BirdsEyeEntry& node : bev.nodes) {
    lines.push_back(node.key + ": " + node.summary);
  }
  return join(lines, "\n");
}

std::string birdseye_to_json(const BirdsEyeView& bev) {
  nlohmann::ordered_json root;
  root["document_summary"] = bev.document_summary;
  root["nodes"] = nlohmann::ordered_json::array();
  for (const BirdsEyeEntry& node : bev.nodes) {
    root["nodes"].push_back({
        {"key", node.key},
        {"section_id", node.section_id},
        {"summary", node.summary},
    });
  }
  return root.dump(2) + "\n";
}

}  // namespace deckgen
