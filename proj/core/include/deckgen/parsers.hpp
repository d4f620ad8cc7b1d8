#pragma once

#include <string>
#include <vector>

namespace deckgen {

// Parsers for the free-form shapes model responses arrive in. They are total:
// arbitrary input either parses or raises exactly the declared error.

// Lines led by "1." / "1)" / "-" / "*" / "•". Markers and surrounding
// whitespace are stripped, empty items dropped, order preserved.
// Throws EmptyList when no item is found.
std::vector<std::string> parse_numbered_list(const std::string& text);

// Extracts the list after the last "Matching keys are:" (case-insensitive),
// split on ';'. Without the marker, falls back to parse_numbered_list, then to
// the whole trimmed response as a single key. Throws EmptyList when nothing is
// extractable.
std::vector<std::string> parse_matched_keys(const std::string& text);

// parse_numbered_list plus: drops any "Slide Title: ..." line and a leading
// "Bullet Points:" header. When no marker-led line exists, the remaining
// non-empty lines count as one bullet each. Throws EmptyList.
std::vector<std::string> parse_bullets(const std::string& text);

// First integer token in [0,10]. Throws NoScoreFound.
int parse_score(const std::string& text);

struct SlideBlock {
  std::string title;
  std::vector<std::string> bullets;
};

// Splits a "Slide Title: ... / Bullet Points: ..." response into blocks.
// Leading list markers and slide numbers around the headers are tolerated.
// Throws ParseFailure when no block is recognized.
std::vector<SlideBlock> parse_slide_blocks(const std::string& text);

}  // namespace deckgen
