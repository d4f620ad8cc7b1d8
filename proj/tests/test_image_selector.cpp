#include <doctest.h>

#include <cmath>

#include "deckgen/document.hpp"
#include "deckgen/image_selector.hpp"
#include "support/test_support.hpp"

using namespace deckgen;
using testsupport::fixture_path;

namespace {

Figure fig(const std::string& id, int page, int w, int h, const std::string& hash,
           double y0 = 100.0, double x0 = 100.0) {
  Figure f;
  f.id = id;
  f.image_path = id + ".png";
  f.position = BoundingBox{page, x0, y0, x0 + 10, y0 + 10};
  f.width_px = w;
  f.height_px = h;
  f.content_hash = hash;
  return f;
}

SlideText slide_with(const std::string& title, std::vector<std::string> bullets) {
  SlideText s;
  s.index = 1;
  s.title = title;
  s.bullets = std::move(bullets);
  return s;
}

}  // namespace

TEST_SUITE("image_selector") {

TEST_CASE("aspect and size filters") {
  const SelectorConfig cfg;
  CHECK(filter_candidates({fig("ok", 1, 100, 100, "h1")}, cfg).size() == 1);
  CHECK(filter_candidates({fig("wide", 1, 2000, 10, "h2")}, cfg).empty());  // ratio 200
  CHECK(filter_candidates({fig("tall", 1, 10, 2000, "h3")}, cfg).empty());  // ratio 0.005
  CHECK(filter_candidates({fig("edge", 1, 100, 25, "h4")}, cfg).size() == 1);   // ratio 4.0 kept
  CHECK(filter_candidates({fig("edge2", 1, 256, 64, "h5")}, cfg).size() == 1);  // min dim 64 kept
  CHECK(filter_candidates({fig("tiny", 1, 256, 63, "h6")}, cfg).empty());
}

TEST_CASE("repeated hashes: three strikes removes all, two keeps the first") {
  const SelectorConfig cfg;  // dedup_repeat_threshold = 3

  const std::vector<Figure> logos = {fig("l1", 1, 100, 100, "logo"),
                                     fig("l2", 2, 100, 100, "logo"),
                                     fig("l3", 3, 100, 100, "logo"),
                                     fig("l4", 4, 100, 100, "logo"),
                                     fig("l5", 5, 100, 100, "logo")};
  CHECK(filter_candidates(logos, cfg).empty());  // 5 occurrences, logo rule by hand

  const std::vector<Figure> pair = {fig("p2", 4, 100, 100, "dup"),
                                    fig("p1", 2, 100, 100, "dup"),
                                    fig("other", 3, 100, 100, "solo")};
  const auto kept = filter_candidates(pair, cfg);
  REQUIRE(kept.size() == 2);
  // earliest document position survives regardless of list order
  CHECK((kept[0].id == "p1" || kept[1].id == "p1"));
  for (const Figure& f : kept) CHECK(f.id != "p2");
}

TEST_CASE("empty hashes never group") {
  const SelectorConfig cfg;
  const std::vector<Figure> figures = {fig("a", 1, 100, 100, ""), fig("b", 2, 100, 100, ""),
                                       fig("c", 3, 100, 100, "")};
  CHECK(filter_candidates(figures, cfg).size() == 3);
}

TEST_CASE("fixture figures reduce to the two real ones") {
  const Document doc = parse_document(fixture_path("sample_doc.json"));
  const auto kept = filter_candidates(doc.figures, SelectorConfig{});
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].id == "f1");
  CHECK(kept[1].id == "f6");
}

TEST_CASE("proximity keeps the span plus slack") {
  const Document doc = parse_document(fixture_path("sample_doc.json"));
  const SelectorConfig cfg;  // slack 1
  // s2a..s2b span pages 3..4
  const std::vector<Figure> candidates = {fig("p2", 2, 100, 100, "a"),
                                          fig("p3", 3, 100, 100, "b"),
                                          fig("p5", 5, 100, 100, "c"),
                                          fig("p6", 6, 100, 100, "d")};
  const auto kept = proximity_filter(candidates, {"s2a", "s2b"}, doc, cfg);
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].id == "p3");
  CHECK(kept[1].id == "p5");  // span_max + 1 is inclusive

  CHECK(proximity_filter(candidates, {}, doc, cfg).empty());  // ungrounded
}

TEST_CASE("score_image is the cosine of the embeddings") {
  Document doc;
  doc.base_dir = ".";
  ScriptedEmbedder embedder(2);
  embedder.set_image("x.png", {1.0, 0.0});
  embedder.set_text("title bullet", {1.0, 0.0});
  const Figure f = fig("x", 1, 100, 100, "h");
  const ScoredImage scored = score_image(doc, f, "title bullet", embedder);
  CHECK(scored.figure_id == "x");
  CHECK(scored.alpha == 1.0);

  ScriptedEmbedder orthogonal(2);
  orthogonal.set_image("x.png", {0.0, 1.0});
  orthogonal.set_text("title bullet", {1.0, 0.0});
  CHECK(score_image(doc, f, "title bullet", orthogonal).alpha == 0.0);
}

TEST_CASE("selection is argmax over survivors, strict at alpha_min") {
  Document doc;
  doc.title = "T";
  Section s;
  s.id = "s1";
  s.title = "Sec";
  s.level = 1;
  s.position = BoundingBox{1, 0, 0, 10, 10};
  doc.sections = {s};
  doc.figures = {fig("low", 1, 100, 100, "h1"), fig("high", 1, 100, 100, "h2")};
  doc.base_dir = ".";

  MappingEntry entry;
  entry.grounded = true;
  entry.section_ids = {"s1"};

  const SlideText slide = slide_with("Sec", {"b"});

  ScriptedEmbedder embedder(2);
  embedder.set_text(slide_embedding_text(slide, embedder), {1.0, 0.0});
  embedder.set_image("low.png", {0.85, std::sqrt(1 - 0.85 * 0.85)});
  embedder.set_image("high.png", {0.9, std::sqrt(1 - 0.9 * 0.9)});

  SelectorConfig cfg;
  cfg.alpha_min = 0.8;
  const auto chosen = select_image(slide, entry, doc, embedder, cfg);
  REQUIRE(chosen.has_value());
  CHECK(chosen->figure_id == "high");
  CHECK(chosen->alpha == doctest::Approx(0.9).epsilon(1e-12));

  // exactly alpha_min never places an image
  ScriptedEmbedder at_bound(2);
  at_bound.set_text(slide_embedding_text(slide, at_bound), {1.0, 0.0});
  at_bound.set_image("low.png", {0.2, 0.1});
  at_bound.set_image("high.png", {0.8, std::sqrt(1.0 - 0.64)});
  SelectorConfig strict;
  strict.alpha_min = cosine_similarity(EmbeddingVector{{0.8, std::sqrt(1.0 - 0.64)}},
                                       EmbeddingVector{{1.0, 0.0}});
  CHECK_FALSE(select_image(slide, entry, doc, at_bound, strict).has_value());
}

TEST_CASE("exact top ties resolve to the earliest document position") {
  Document doc;
  doc.title = "T";
  Section s;
  s.id = "s1";
  s.title = "Sec";
  s.level = 1;
  s.position = BoundingBox{1, 0, 0, 10, 10};
  Section s2 = s;
  s2.id = "s2";
  s2.position.page = 4;
  doc.sections = {s, s2};
  doc.figures = {fig("late", 4, 100, 100, "h1"), fig("early", 2, 100, 100, "h2")};
  doc.base_dir = ".";

  MappingEntry entry;
  entry.grounded = true;
  entry.section_ids = {"s1", "s2"};  // span 1..4

  const SlideText slide = slide_with("Sec", {"b"});
  ScriptedEmbedder embedder(2);
  embedder.set_text(slide_embedding_text(slide, embedder), {1.0, 0.0});
  embedder.set_image("late.png", {0.95, 0.0});   // same direction: cosine 1.0
  embedder.set_image("early.png", {19.0, 0.0});  // scale must not matter

  SelectorConfig cfg;
  cfg.alpha_min = 0.8;
  const auto chosen = select_image(slide, entry, doc, embedder, cfg);
  REQUIRE(chosen.has_value());
  CHECK(chosen->figure_id == "early");
}

TEST_CASE("ungrounded slides never get an image") {
  const Document doc = parse_document(fixture_path("sample_doc.json"));
  MappingEntry entry;  // grounded=false
  HashEmbedder embedder(16);
  CHECK_FALSE(select_image(slide_with("T", {"b"}), entry, doc, embedder, SelectorConfig{})
                  .has_value());
}

}  // TEST_SUITE
