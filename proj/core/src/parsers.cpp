#include "deckgen/parsers.hpp"

#include <cctype>
#include <optional>

#include "deckgen/errors.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

namespace {

constexpr std::string_view kBulletGlyph = "\xE2\x80\xA2";  // •

// Returns the item text when the line starts with a list marker.
std::optional<std::string> strip_list_marker(const std::string& line) {
  const std::string t = trim(line);
  if (t.empty()) return std::nullopt;
  if (t[0] == '-' || t[0] == '*') return trim(t.substr(1));
  if (t.rfind(kBulletGlyph, 0) == 0) return trim(t.substr(kBulletGlyph.size()));
  std::size_t i = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  if (i > 0 && i < t.size() && (t[i] == '.' || t[i] == ')')) return trim(t.substr(i + 1));
  return std::nullopt;
}

bool starts_with_ci(const std::string& text, std::string_view prefix) {
  if (text.size() < prefix.size()) return false;
  return to_lower(text.substr(0, prefix.size())) == to_lower(prefix);
}

// "Slide Title: X" with optional list marker or numbering in front; returns X.
std::optional<std::string> match_title_line(const std::string& line) {
  std::string t = trim(line);
  if (auto item = strip_list_marker(t)) t = *item;
  if (!starts_with_ci(t, "slide title")) return std::nullopt;
  std::size_t pos = std::string("slide title").size();
  while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
  if (pos >= t.size() || t[pos] != ':') return std::nullopt;
  std::string title = trim(t.substr(pos + 1));
  // tolerate numbering the prompt asked to omit, e.g. "1. Overview"
  if (auto unnumbered = strip_list_marker(title)) {
    if (!unnumbered->empty()) title = *unnumbered;
  }
  return title;
}

bool is_bullet_header(const std::string& line, std::string* inline_rest) {
  const std::string t = trim(line);
  if (!starts_with_ci(t, "bullet point")) return false;
  const std::size_t colon = t.find(':');
  if (colon == std::string::npos) return false;
  *inline_rest = trim(t.substr(colon + 1));
  return true;
}

bool is_bare_slide_number(const std::string& line) {
  const std::string t = to_lower(trim(line));
  if (t.rfind("slide", 0) != 0) return false;
  const std::string rest = trim(t.substr(5));
  if (rest.empty()) return false;
  for (char c : rest) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::string> collect_items(const std::vector<std::string>& lines) {
  std::vector<std::string> marked;
  std::vector<std::string> plain;
  for (const std::string& line : lines) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (auto item = strip_list_marker(t)) {
      if (!item->empty()) marked.push_back(*item);
    } else {
      plain.push_back(t);
    }
  }
  return marked.empty() ? plain : marked;
}

}  // namespace

std::vector<std::string> parse_numbered_list(const std::string& text) {
  std::vector<std::string> items;
  for (const std::string& line : split_lines(text)) {
    if (auto item = strip_list_marker(line)) {
      if (!item->empty()) items.push_back(*item);
    }
  }
  if (items.empty()) throw EmptyList();
  return items;
}

std::vector<std::string> parse_matched_keys(const std::string& text) {
  static constexpr std::string_view kMarker = "matching keys are:";
  const std::size_t pos = rfind_ci(text, kMarker);
  if (pos != std::string::npos) {
    const std::string tail = text.substr(pos + kMarker.size());
    std::vector<std::string> keys;
    std::string current;
    for (char c : tail) {
      if (c == ';') {
        if (!trim(current).empty()) keys.push_back(trim(current));
        current.clear();
      } else {
        current.push_back(c);
      }
    }
    if (!trim(current).empty()) keys.push_back(trim(current));
    if (!keys.empty()) return keys;
  }
  try {
    return parse_numbered_list(text);
  } catch (const EmptyList&) {
  }
  const std::string whole = trim(text);
  if (whole.empty()) throw EmptyList();
  return {whole};
}

std::vector<std::string> parse_bullets(const std::string& text) {
  std::vector<std::string> candidate_lines;
  for (const std::string& line : split_lines(text)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (match_title_line(t)) continue;
    std::string inline_rest;
    if (is_bullet_header(t, &inline_rest)) {
      if (!inline_rest.empty()) candidate_lines.push_back(inline_rest);
      continue;
    }
    candidate_lines.push_back(t);
  }
  std::vector<std::string> items = collect_items(candidate_lines);
  if (items.empty()) throw EmptyList();
  return items;
}

int parse_score(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      long value = 0;
      bool overflow = false;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        value = value * 10 + (text[j] - '0');
        if (value > 1000000) overflow = true;
        ++j;
      }
      if (!overflow && value >= 0 && value <= 10) return static_cast<int>(value);
      i = j;
    } else {
      ++i;
    }
  }
  throw NoScoreFound();
}

std::vector<SlideBlock> parse_slide_blocks(const std::string& text) {
  std::vector<SlideBlock> blocks;
  std::vector<std::string> body_lines;

  auto flush = [&] {
    if (blocks.empty()) {
      body_lines.clear();
      return;
    }
    std::vector<std::string> filtered;
    for (const std::string& line : body_lines) {
      std::string inline_rest;
      if (is_bullet_header(line, &inline_rest)) {
        if (!inline_rest.empty()) filtered.push_back(inline_rest);
        continue;
      }
      if (is_bare_slide_number(line)) continue;
      filtered.push_back(line);
    }
    blocks.back().bullets = collect_items(filtered);
    body_lines.clear();
  };

  for (const std::string& line : split_lines(text)) {
    if (auto title = match_title_line(line)) {
      flush();
      blocks.push_back(SlideBlock{*title, {}});
      continue;
    }
    body_lines.push_back(line);
  }
  flush();

  if (blocks.empty()) throw ParseFailure("no 'Slide Title:' block recognized");
  return blocks;
}

}  // namespace deckgen
