#include "deckgen/text_units.hpp"

#include <cctype>
#include <set>

#include "deckgen/text_util.hpp"

namespace deckgen {

std::vector<std::string> split_paragraphs(const Document& doc) {
  std::vector<std::string> paragraphs;
  for (const FlatSection& section : flatten_sections(doc)) {
    for (const std::string& block : split_blank_line_blocks(section.body)) {
      paragraphs.push_back(block);
    }
  }
  return paragraphs;
}

namespace {

bool space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

const std::set<std::string>& abbreviations() {
  static const std::set<std::string> abbrevs = {
      "dr",  "mr",   "mrs", "ms",  "prof", "sr",   "jr", "st",
      "fig", "figs", "eq",  "eqs", "sec",  "secs", "no", "nos",
      "vs",  "cf",   "al",  "etc", "e.g",  "i.e",  "resp", "approx",
  };
  return abbrevs;
}

// token immediately before the period at `period_pos`, lowercased, dots kept
bool is_abbreviation(const std::string& text, std::size_t period_pos) {
  std::size_t start = period_pos;
  while (start > 0) {
    const char c = text[start - 1];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '.') {
      --start;
    } else {
      break;
    }
  }
  const std::string token = to_lower(text.substr(start, period_pos - start));
  if (token.empty()) return false;
  if (token.size() == 1 && std::isalpha(static_cast<unsigned char>(token[0]))) {
    return true;  // initials, "J. Smith"
  }
  return abbreviations().count(token) > 0;
}

}  // namespace

std::vector<std::string> split_sentences(const std::string& text) {
  std::vector<std::string> sentences;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    current.push_back(c);
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    const std::size_t terminator = i;
    std::size_t j = i + 1;
    // closing quotes and brackets ride along with the sentence
    while (j < text.size() && (text[j] == '"' || text[j] == '\'' || text[j] == ')')) {
      current.push_back(text[j]);
      ++j;
    }
    std::size_t k = j;
    while (k < text.size() && space(text[k])) ++k;
    bool boundary = k > j && k < text.size() &&
                    (std::isupper(static_cast<unsigned char>(text[k])) ||
                     std::isdigit(static_cast<unsigned char>(text[k])));
    if (boundary && c == '.' && is_abbreviation(text, terminator)) boundary = false;
    if (boundary) {
      const std::string sentence = trim(current);
      if (!sentence.empty()) sentences.push_back(sentence);
      current.clear();
      i = k;
    } else {
      i = j;
    }
  }
  const std::string tail = trim(current);
  if (!tail.empty()) sentences.push_back(tail);
  return sentences;
}

}  // namespace deckgen
