#include <doctest.h>

#include "deckgen/deck.hpp"
#include "deckgen/errors.hpp"
#include "support/test_support.hpp"

using namespace deckgen;
using testsupport::fixture_path;

namespace {

Deck sample_deck() {
  const Document doc = parse_document(fixture_path("sample_doc.json"));

  SlideText t1;
  t1.index = 1;
  t1.title = "Opening";
  t1.bullets = {"first point", "second point"};
  t1.flags = {SlideFlag::WordOverflow};

  SlideText t2;
  t2.index = 2;
  t2.title = "Closing";
  t2.bullets = {"done"};

  MappingEntry m1;
  m1.slide_index = 1;
  m1.grounded = true;
  m1.section_ids = {"s1"};
  m1.raw_keys = {"Introduction"};
  MappingEntry m2;
  m2.slide_index = 2;

  SlideMapping mapping;
  mapping.entries = {m1, m2};

  std::vector<std::optional<ScoredImage>> images = {ScoredImage{"f1", 0.9375}, std::nullopt};
  return assemble({t1, t2}, images, mapping, doc,
                  GeneratorInfo{"staged", "test-model", "cafebabecafebabe"});
}

}  // namespace

TEST_SUITE("deck") {

TEST_CASE("assemble joins texts, images and provenance") {
  const Deck deck = sample_deck();
  REQUIRE(deck.slides.size() == 2);
  CHECK(deck.slides[0].image.has_value());
  CHECK(deck.slides[0].image->figure_id == "f1");
  CHECK(deck.slides[0].image->image_path == "images/mesh_overview.png");
  CHECK(deck.slides[0].provenance.grounded);
  CHECK(deck.slides[0].provenance.flags.count(SlideFlag::WordOverflow) == 1);
  CHECK_FALSE(deck.slides[1].image.has_value());
  CHECK_FALSE(deck.slides[1].provenance.grounded);
}

TEST_CASE("assemble rejects misaligned inputs") {
  const Document doc = parse_document(fixture_path("sample_doc.json"));
  SlideText t;
  t.index = 1;
  t.title = "X";
  t.bullets = {"b"};
  SlideMapping mapping;
  mapping.entries = {MappingEntry{}};
  CHECK_THROWS_AS(assemble({t}, {}, mapping, doc, GeneratorInfo{}), LengthMismatch);
  CHECK_THROWS_AS(assemble({t}, {std::nullopt}, SlideMapping{}, doc, GeneratorInfo{}),
                  LengthMismatch);
}

TEST_CASE("unknown figure id in a selection is rejected") {
  const Document doc = parse_document(fixture_path("sample_doc.json"));
  SlideText t;
  t.index = 1;
  t.title = "X";
  t.bullets = {"b"};
  SlideMapping mapping;
  mapping.entries = {MappingEntry{}};
  std::vector<std::optional<ScoredImage>> images = {ScoredImage{"ghost", 0.9}};
  CHECK_THROWS_AS(assemble({t}, images, mapping, doc, GeneratorInfo{}), InvariantError);
}

TEST_CASE("round trip identity and byte-stable emits") {
  const Deck deck = sample_deck();
  const std::string text = emit_structured(deck);
  CHECK(text == emit_structured(deck));  // deterministic emitter

  const Deck back = load_structured(text);
  CHECK(emit_structured(back) == text);  // load . emit is the identity
  CHECK(back.document_title == deck.document_title);
  CHECK(back.generator.config_digest == "cafebabecafebabe");
  REQUIRE(back.slides.size() == 2);
  CHECK(back.slides[0].bullets == deck.slides[0].bullets);
  CHECK(back.slides[0].image->alpha == deck.slides[0].image->alpha);
  CHECK(back.slides[0].provenance.flags == deck.slides[0].provenance.flags);
}

TEST_CASE("corrupted files name the offending path") {
  const std::string text = emit_structured(sample_deck());

  std::string broken = text;
  const auto pos = broken.find("\"bullets\": [");
  REQUIRE(pos != std::string::npos);
  broken.replace(pos, std::string("\"bullets\": [").size(), "\"bullets\": 3, \"x\": [");
  try {
    load_structured(broken);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.path() == "slides[0].bullets");
  }

  CHECK_THROWS_AS(load_structured("{"), SchemaError);
  CHECK_THROWS_AS(load_structured("[]"), SchemaError);
}

TEST_CASE("indices must be contiguous from one") {
  std::string text = emit_structured(sample_deck());
  const auto pos = text.find("\"index\": 2");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, std::string("\"index\": 2").size(), "\"index\": 7");
  CHECK_THROWS_AS(load_structured(text), InvariantError);
}

TEST_CASE("markdown render shape") {
  const Deck deck = sample_deck();
  const std::string md = emit_markdown(deck);

  auto count = [&](const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = md.find(needle, pos)) != std::string::npos) {
      ++n;
      pos += needle.size();
    }
    return n;
  };
  CHECK(count("\n## ") == 2);
  CHECK(count("\n- ") == 3);
  CHECK(count("![f1](images/mesh_overview.png)") == 1);
  CHECK(count("<!-- provenance:") == 2);
  CHECK(md.rfind("# Adaptive Mesh Refinement for Coastal Flood Models\n", 0) == 0);

  Deck empty;
  empty.document_title = "Nothing";
  const std::string empty_md = emit_markdown(empty);
  CHECK(empty_md == "# Nothing\n");
}

}  // TEST_SUITE
