#include <doctest.h>

#include <random>

#include "deckgen/errors.hpp"
#include "deckgen/parsers.hpp"
#include "support/test_support.hpp"

using namespace deckgen;

TEST_SUITE("parsers") {

TEST_CASE("parse_numbered_list recognizes the documented markers") {
  CHECK(parse_numbered_list("1. A\n2. B") == std::vector<std::string>{"A", "B"});
  CHECK(parse_numbered_list("- A\n\n* B") == std::vector<std::string>{"A", "B"});
  CHECK(parse_numbered_list("1) A\n12) B") == std::vector<std::string>{"A", "B"});
  CHECK(parse_numbered_list("\xE2\x80\xA2 A") == std::vector<std::string>{"A"});
  CHECK(parse_numbered_list("Intro text\n- A\ntrailing prose") ==
        std::vector<std::string>{"A"});
  CHECK_THROWS_AS(parse_numbered_list("no list here"), EmptyList);
  CHECK_THROWS_AS(parse_numbered_list(""), EmptyList);
  CHECK_THROWS_AS(parse_numbered_list("-\n- \n*"), EmptyList);  // markers without items
}

TEST_CASE("parse_matched_keys") {
  CHECK(parse_matched_keys("Matching keys are: Introduction; Methods") ==
        std::vector<std::string>{"Introduction", "Methods"});
  CHECK(parse_matched_keys("Matching keys are: Results") ==
        std::vector<std::string>{"Results"});
  // the last occurrence wins
  CHECK(parse_matched_keys("Matching keys are: A\nblah\nmatching keys are: B; C") ==
        std::vector<std::string>{"B", "C"});
  // verbose response without the marker falls back to a single key
  CHECK(parse_matched_keys("I think Results matches.") ==
        std::vector<std::string>{"I think Results matches."});
  // numbered fallback before the whole-text fallback
  CHECK(parse_matched_keys("1. Results\n2. Methods") ==
        std::vector<std::string>{"Results", "Methods"});
  CHECK_THROWS_AS(parse_matched_keys("   "), EmptyList);
  CHECK_THROWS_AS(parse_matched_keys("Matching keys are:  ; ;"), EmptyList);
}

TEST_CASE("parse_bullets") {
  CHECK(parse_bullets("Slide Title: X\nBullet Points:\n- a\n- b") ==
        std::vector<std::string>{"a", "b"});
  CHECK(parse_bullets("- only one") == std::vector<std::string>{"only one"});
  // plain lines count when no marker-led line exists (baseline shape)
  CHECK(parse_bullets("Bullet Points:\nfirst point\nsecond point") ==
        std::vector<std::string>{"first point", "second point"});
  // marker-led lines win over prose
  CHECK(parse_bullets("Sure, here you go\n- a\n- b") == std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(parse_bullets("Slide Title: X\nBullet Points:"), EmptyList);
  CHECK_THROWS_AS(parse_bullets(""), EmptyList);
}

TEST_CASE("parse_score") {
  CHECK(parse_score("Score: 8") == 8);
  CHECK(parse_score("I'd rate this 10/10") == 10);
  CHECK(parse_score("0") == 0);
  CHECK(parse_score("a 42 then 7") == 7);  // first token in range wins
  CHECK_THROWS_AS(parse_score("excellent"), NoScoreFound);
  CHECK_THROWS_AS(parse_score("eleven"), NoScoreFound);
  CHECK_THROWS_AS(parse_score("999999999999999999999999"), NoScoreFound);
}

TEST_CASE("parse_slide_blocks handles the documented shapes") {
  const auto blocks = parse_slide_blocks(
      "Slide Title: One\nBullet Points:\n- a\n- b\n\nSlide Title: Two\nBullet Points:\nplain c");
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].title == "One");
  CHECK(blocks[0].bullets == std::vector<std::string>{"a", "b"});
  CHECK(blocks[1].bullets == std::vector<std::string>{"plain c"});

  // slide numbers sneak in despite the instruction; they are stripped
  const auto numbered = parse_slide_blocks(
      "1. Slide Title: 1. Intro\nBullet Points:\n- x\nSlide 2\nSlide Title: More\n- y");
  REQUIRE(numbered.size() == 2);
  CHECK(numbered[0].title == "Intro");
  CHECK(numbered[0].bullets == std::vector<std::string>{"x"});
  CHECK(numbered[1].title == "More");

  CHECK_THROWS_AS(parse_slide_blocks("nothing that looks like a slide"), ParseFailure);
}

TEST_CASE("fuzz: parsers only raise their declared errors") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> len_dist(0, 160);
  std::uniform_int_distribution<int> byte_dist(0, 255);
  const std::vector<std::string> snippets = {
      "\n", "- ", "* ", "1. ", "12) ", "\xE2\x80\xA2 ", "Slide Title:",
      "Bullet Points:", "Matching keys are:", "Score:", ":", ";", "10",
  };
  std::uniform_int_distribution<std::size_t> snippet_dist(0, snippets.size() - 1);
  std::uniform_int_distribution<int> mode_dist(0, 3);

  for (int round = 0; round < 2500; ++round) {
    std::string input;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
      if (mode_dist(rng) == 0) {
        input += snippets[snippet_dist(rng)];
      } else {
        input.push_back(static_cast<char>(byte_dist(rng)));
      }
    }

    try { parse_numbered_list(input); } catch (const EmptyList&) {}
    try { parse_matched_keys(input); } catch (const EmptyList&) {}
    try { parse_bullets(input); } catch (const EmptyList&) {}
    try { parse_score(input); } catch (const NoScoreFound&) {}
    try { parse_slide_blocks(input); } catch (const ParseFailure&) {}
    // any other exception escapes and fails the test
  }
}

}  // TEST_SUITE
