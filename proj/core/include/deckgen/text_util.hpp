#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace deckgen {

std::string to_lower(std::string_view text);
std::string trim(std::string_view text);

// Runs of whitespace become a single space, leading/trailing runs vanish.
std::string collapse_whitespace(std::string_view text);

// Removes ASCII punctuation characters.
std::string strip_punctuation(std::string_view text);

// Splits on '\n'; '\r' is dropped. Always yields at least one element.
std::vector<std::string> split_lines(std::string_view text);

// Whitespace-delimited tokens.
std::vector<std::string> split_words(std::string_view text);
std::size_t word_count(std::string_view text);

// Blank-line separated blocks, trimmed, empties dropped.
std::vector<std::string> split_blank_line_blocks(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool contains_ci(std::string_view haystack, std::string_view needle);
// Offset of the last case-insensitive occurrence, npos if absent.
std::size_t rfind_ci(std::string_view haystack, std::string_view needle);

// Upper-bound token estimate for context budgeting: ceil(bytes / 4).
long estimate_tokens(std::string_view text);

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

std::string read_file(const std::string& path);
// Writes to a sibling temp file and renames it into place, so a failed run
// never leaves a partial file behind.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace deckgen
