#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testsupport {

inline std::string fixture_path(const std::string& relative) {
  return std::string(DECKGEN_FIXTURE_DIR) + "/" + relative;
}

inline std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::filesystem::path make_temp_dir(const std::string& tag) {
  std::string pattern =
      (std::filesystem::temp_directory_path() / ("deckgen_" + tag + "_XXXXXX")).string();
  char* made = ::mkdtemp(pattern.data());
  REQUIRE(made != nullptr);
  return std::filesystem::path(made);
}

// Full-matrix Levenshtein, kept deliberately independent of the library's
// row-rolling implementation.
inline std::size_t oracle_levenshtein(const std::string& a, const std::string& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::vector<std::size_t>> dp(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) dp[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) dp[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t substitution = dp[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      const std::size_t deletion = dp[i - 1][j] + 1;
      const std::size_t insertion = dp[i][j - 1] + 1;
      dp[i][j] = std::min({substitution, deletion, insertion});
    }
  }
  return dp[n][m];
}

inline double oracle_similarity(const std::string& a, const std::string& b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(oracle_levenshtein(a, b)) / static_cast<double>(longest);
}

// Random string over an alphabet the similarity normalization leaves alone.
inline std::string random_plain_string(std::mt19937& rng, std::size_t min_len,
                                       std::size_t max_len) {
  static const std::string alphabet = "abcdefghijklmnopqrstuvwxyz0123456789";
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<std::size_t> char_dist(0, alphabet.size() - 1);
  std::string out;
  const std::size_t len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i) out.push_back(alphabet[char_dist(rng)]);
  return out;
}

// Base string over a restricted alphabet plus a mutant at exact Levenshtein
// distance `distance`: substituted positions receive characters that occur
// nowhere in the base, which forces the distance to equal the substitution
// count.
inline std::pair<std::string, std::string> string_pair_at_distance(std::mt19937& rng,
                                                                   std::size_t length,
                                                                   std::size_t distance) {
  static const std::string base_alphabet = "abcdefghijklmnopqrst";   // 20 letters
  static const std::string fresh_alphabet = "uvwxyz0123456789";      // disjoint
  REQUIRE(distance <= length);
  std::uniform_int_distribution<std::size_t> base_dist(0, base_alphabet.size() - 1);
  std::uniform_int_distribution<std::size_t> fresh_dist(0, fresh_alphabet.size() - 1);
  std::string base;
  for (std::size_t i = 0; i < length; ++i) base.push_back(base_alphabet[base_dist(rng)]);

  std::vector<std::size_t> positions(length);
  for (std::size_t i = 0; i < length; ++i) positions[i] = i;
  std::shuffle(positions.begin(), positions.end(), rng);

  std::string mutant = base;
  for (std::size_t i = 0; i < distance; ++i) {
    mutant[positions[i]] = fresh_alphabet[fresh_dist(rng)];
  }
  return {base, mutant};
}

}  // namespace testsupport
