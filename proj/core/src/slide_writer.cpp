#include "deckgen/slide_writer.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "deckgen/errors.hpp"
#include "deckgen/parsers.hpp"
#include "deckgen/prompts.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

std::string to_string(SlideFlag flag) {
  switch (flag) {
    case SlideFlag::Fallback: return "Fallback";
    case SlideFlag::WeakGrounding: return "WeakGrounding";
    case SlideFlag::BulletOverflow: return "BulletOverflow";
    case SlideFlag::WordOverflow: return "WordOverflow";
    case SlideFlag::Baseline: return "Baseline";
  }
  return "Unknown";
}

std::optional<SlideFlag> slide_flag_from_string(const std::string& name) {
  static const std::map<std::string, SlideFlag> lookup = {
      {"Fallback", SlideFlag::Fallback},
      {"WeakGrounding", SlideFlag::WeakGrounding},
      {"BulletOverflow", SlideFlag::BulletOverflow},
      {"WordOverflow", SlideFlag::WordOverflow},
      {"Baseline", SlideFlag::Baseline},
  };
  auto it = lookup.find(name);
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

namespace {

void collect_subtree(const Section& section, std::vector<const Section*>& out) {
  out.push_back(&section);
  for (const Section& child : section.children) collect_subtree(child, out);
}

}  // namespace

std::string concat_sections(const Document& doc, const std::vector<std::string>& ids) {
  std::vector<const Section*> nodes;
  for (const std::string& id : ids) {
    const Section* section = find_section(doc, id);
    if (section == nullptr) throw UnknownSectionId(id);
    collect_subtree(*section, nodes);
  }

  // document order, one entry per section even when subtrees overlap
  std::map<std::string, std::size_t> rank;
  std::size_t next = 0;
  for (const std::string& id : section_order(doc)) rank[id] = next++;
  std::stable_sort(nodes.begin(), nodes.end(), [&](const Section* a, const Section* b) {
    return rank.at(a->id) < rank.at(b->id);
  });
  nodes.erase(std::unique(nodes.begin(), nodes.end(),
                          [](const Section* a, const Section* b) { return a->id == b->id; }),
              nodes.end());

  std::vector<std::string> blocks;
  for (const Section* node : nodes) {
    const std::string body = trim(node->body);
    blocks.push_back(body.empty() ? node->title : node->title + "\n\n" + body);
  }
  return join(blocks, "\n\n");
}

std::string serialize_previous_slides(const std::vector<SlideText>& previous,
                                      std::size_t degraded_to_title_only) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < previous.size(); ++i) {
    nlohmann::ordered_json slide;
    slide["Slide Title"] = previous[i].title;
    if (i >= degraded_to_title_only) {
      slide["Bullet Points"] = previous[i].bullets;
    }
    list.push_back(std::move(slide));
  }
  return list.dump(2);
}

namespace {

std::string render_slide_prompt(int index, const std::string& title,
                                const std::string& source_text,
                                const std::vector<SlideText>& previous,
                                std::size_t degraded, int max_bullets) {
  return render(prompts::slide_content(),
                {{"slide_index", std::to_string(index)},
                 {"previous_slide", serialize_previous_slides(previous, degraded)},
                 {"max_bullet", std::to_string(max_bullets)},
                 {"heading", title},
                 {"text", source_text}});
}

struct Violations {
  bool bullet_overflow = false;
  bool word_overflow = false;
  bool any() const { return bullet_overflow || word_overflow; }
};

Violations check_constraints(const std::vector<std::string>& bullets,
                             const WriterOptions& options) {
  Violations v;
  if (bullets.size() > static_cast<std::size_t>(options.max_bullets)) v.bullet_overflow = true;
  for (const std::string& bullet : bullets) {
    if (word_count(bullet) > static_cast<std::size_t>(options.max_words_per_bullet)) {
      v.word_overflow = true;
      break;
    }
  }
  return v;
}

}  // namespace

SlideText generate_slide(int index, const std::string& title, const std::string& source_text,
                         const std::vector<SlideText>& previous, Gateway& gateway,
                         const ModelConfig& cfg, const WriterOptions& options,
                         Diagnostics* diag) {
  if (index != static_cast<int>(previous.size()) + 1) {
    throw Error("generate_slide: slide " + std::to_string(index) + " requested with " +
                std::to_string(previous.size()) + " previous slides");
  }

  // degrade oldest slides to title-only until the prompt fits the budget
  const long available = cfg.context_budget_tokens - cfg.max_output_tokens;
  std::size_t degraded = 0;
  std::string prompt = render_slide_prompt(index, title, source_text, previous, degraded,
                                           options.max_bullets);
  while (estimate_tokens(prompt) > available && degraded < previous.size()) {
    ++degraded;
    prompt = render_slide_prompt(index, title, source_text, previous, degraded,
                                 options.max_bullets);
  }
  if (degraded > 0) {
    warn(diag, "slide " + std::to_string(index) + ": degraded the oldest " +
                   std::to_string(degraded) + " previous slide(s) to title-only to fit the budget");
  }

  auto try_parse = [](const std::string& response) -> std::optional<std::vector<std::string>> {
    try {
      return parse_bullets(response);
    } catch (const EmptyList&) {
      return std::nullopt;
    }
  };

  const std::string first_response = gateway.complete(cfg, prompt);
  std::optional<std::vector<std::string>> first = try_parse(first_response);
  if (first && !check_constraints(*first, options).any()) {
    return SlideText{index, title, *first, {}, {}};
  }

  const std::string retry_prompt =
      prompt + "\nYour previous answer violated the constraints; fix it.";
  const std::string second_response = gateway.complete(cfg, retry_prompt);
  std::optional<std::vector<std::string>> second = try_parse(second_response);

  const std::optional<std::vector<std::string>>& chosen = second ? second : first;
  if (!chosen) throw SlideGenerationFailed(index);

  SlideText slide{index, title, *chosen, {}, {}};
  const Violations v = check_constraints(*chosen, options);
  if (v.bullet_overflow) slide.flags.insert(SlideFlag::BulletOverflow);
  if (v.word_overflow) slide.flags.insert(SlideFlag::WordOverflow);
  if (v.any()) {
    warn(diag, "slide " + std::to_string(index) + ": constraints still violated after the retry");
  }
  return slide;
}

std::vector<SlideText> write_deck_text(const Outline& outline, const SlideMapping& mapping,
                                       const Document& doc, const BirdsEyeView& bev,
                                       Gateway& gateway, const ModelConfig& cfg,
                                       const WriterOptions& options, Diagnostics* diag) {
  if (outline.titles.size() != mapping.entries.size()) {
    throw LengthMismatch(outline.titles.size(), mapping.entries.size());
  }

  std::vector<SlideText> slides;
  for (std::size_t i = 0; i < outline.titles.size(); ++i) {
    const MappingEntry& entry = mapping.entries[i];
    std::string source_text;
    bool fallback = false;
    if (entry.grounded) {
      source_text = concat_sections(doc, entry.section_ids);
    } else {
      source_text = bev.document_summary;
      fallback = true;
    }
    SlideText slide = generate_slide(static_cast<int>(i) + 1, outline.titles[i], source_text,
                                     slides, gateway, cfg, options, diag);
    slide.source_section_ids = entry.section_ids;
    if (fallback) slide.flags.insert(SlideFlag::Fallback);
    if (entry.fallback) slide.flags.insert(SlideFlag::WeakGrounding);
    slides.push_back(std::move(slide));
  }
  return slides;
}

}  // namespace deckgen
