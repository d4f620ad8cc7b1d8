#include <doctest.h>

#include "deckgen/baselines.hpp"
#include "deckgen/errors.hpp"
#include "deckgen/prompts.hpp"
#include "support/test_support.hpp"

using namespace deckgen;
using testsupport::fixture_path;

namespace {

Document mini_doc() {
  Document doc;
  doc.title = "Mini";
  Section a;
  a.id = "a";
  a.title = "Background";
  a.level = 1;
  a.body = "Coastal floods are frequent.";
  a.position = BoundingBox{1, 0, 0, 10, 10};
  Section b = a;
  b.id = "b";
  b.title = "Approach";
  b.body = "We refine meshes adaptively.";
  doc.sections = {a, b};
  return doc;
}

ModelConfig model() {
  ModelConfig cfg;
  cfg.model_name = "scripted";
  cfg.max_output_tokens = 512;
  cfg.context_budget_tokens = 32768;
  return cfg;
}

GatewayOptions no_delay() {
  GatewayOptions options;
  options.retry.base_delay_ms = 0;
  return options;
}

std::string render_baseline(BaselineKind kind, int k, const Document& doc) {
  const PromptTemplate& tmpl = kind == BaselineKind::Flat   ? prompts::baseline_flat()
                               : kind == BaselineKind::Cot ? prompts::baseline_cot()
                                                           : prompts::baseline_cons();
  return render(tmpl, {{"number_of_slides", std::to_string(k)},
                       {"document", serialize_document(doc)}});
}

}  // namespace

TEST_SUITE("baselines") {

TEST_CASE("serialize_document is headings plus bodies in pre-order") {
  CHECK(serialize_document(mini_doc()) ==
        "Background\nCoastal floods are frequent.\n\nApproach\nWe refine meshes adaptively.");

  const Document doc = parse_document(fixture_path("sample_doc.json"));
  const std::string text = serialize_document(doc);
  CHECK(text.find("Introduction\n") < text.find("Motivation\n"));
  CHECK(text.find("Motivation\n") < text.find("Methods"));
  // a container section with no body contributes its heading only
  CHECK(text.find("Methods\n\nMesh Generation") != std::string::npos);
}

TEST_CASE("rendered prompts match the golden files") {
  const Document doc = mini_doc();
  CHECK(render_baseline(BaselineKind::Flat, 5, doc) ==
        testsupport::read_all(fixture_path("golden/baseline_flat_k5.txt")));
  CHECK(render_baseline(BaselineKind::Cot, 5, doc) ==
        testsupport::read_all(fixture_path("golden/baseline_cot_k5.txt")));
  CHECK(render_baseline(BaselineKind::Cons, 5, doc) ==
        testsupport::read_all(fixture_path("golden/baseline_cons_k5.txt")));
}

TEST_CASE("the three prompts differ only in their instruction block") {
  const Document doc = mini_doc();
  const std::string flat = render_baseline(BaselineKind::Flat, 3, doc);
  const std::string cot = render_baseline(BaselineKind::Cot, 3, doc);
  const std::string cons = render_baseline(BaselineKind::Cons, 3, doc);

  CHECK(flat != cot);
  CHECK(cot != cons);
  for (const std::string* prompt : {&flat, &cot, &cons}) {
    CHECK(prompt->find("ONLY 3 slides") != std::string::npos);
    CHECK(prompt->find("----------Document Started----------") != std::string::npos);
    CHECK(prompt->find("Slide Title: The slide title") != std::string::npos);
    CHECK(prompt->find("Do not output slide number") != std::string::npos);
  }
  CHECK(cons.find("around 7 bullet points") != std::string::npos);
  CHECK(cot.find("around 7 bullet points") == std::string::npos);
  CHECK(flat.find("around 7 bullet points") == std::string::npos);
  CHECK(cot.find("Create a high-level outline") != std::string::npos);
  CHECK(flat.find("Create a high-level outline") == std::string::npos);
}

TEST_CASE("run_baseline parses blocks into a flagged deck") {
  ScriptedChatProvider provider;
  provider.set_default_response(
      "Slide Title: Flood Basics\nBullet Points:\n- floods are frequent\n- they are costly\n\n"
      "Slide Title: Meshes\nBullet Points:\n- adaptive refinement saves cells");
  Gateway gateway(provider, no_delay());

  const Deck deck =
      run_baseline(BaselineKind::Flat, mini_doc(), 2, gateway, model(), "digest0000000000");
  REQUIRE(deck.slides.size() == 2);
  CHECK(deck.generator.pipeline == "baseline-flat");
  CHECK(deck.slides[0].index == 1);
  CHECK(deck.slides[0].title == "Flood Basics");
  CHECK(deck.slides[1].bullets == std::vector<std::string>{"adaptive refinement saves cells"});
  for (const Slide& slide : deck.slides) {
    CHECK_FALSE(slide.provenance.grounded);
    CHECK(slide.provenance.section_ids.empty());
    CHECK(slide.provenance.flags.count(SlideFlag::Baseline) == 1);
  }

  // the deck file round-trips like any pipeline deck
  CHECK(emit_structured(load_structured(emit_structured(deck))) == emit_structured(deck));
}

TEST_CASE("slide numbers in the output are stripped") {
  ScriptedChatProvider provider;
  provider.set_default_response(
      "1. Slide Title: One\nBullet Points:\n- a\n\n2. Slide Title: Two\nBullet Points:\n- b");
  Gateway gateway(provider, no_delay());
  const Deck deck = run_baseline(BaselineKind::Cot, mini_doc(), 2, gateway, model(), "d");
  REQUIRE(deck.slides.size() == 2);
  CHECK(deck.slides[0].title == "One");
  CHECK(deck.slides[1].title == "Two");
}

TEST_CASE("unusable responses raise ParseFailure") {
  ScriptedChatProvider provider;
  provider.set_default_response("I cannot help with that.");
  Gateway gateway(provider, no_delay());
  CHECK_THROWS_AS(run_baseline(BaselineKind::Flat, mini_doc(), 2, gateway, model(), "d"),
                  ParseFailure);
}

TEST_CASE("bullet-less blocks are dropped with a warning") {
  ScriptedChatProvider provider;
  provider.set_default_response(
      "Slide Title: Empty\nBullet Points:\n\nSlide Title: Full\nBullet Points:\n- x");
  Gateway gateway(provider, no_delay());
  Diagnostics diag;
  const Deck deck = run_baseline(BaselineKind::Flat, mini_doc(), 2, gateway, model(), "d", &diag);
  REQUIRE(deck.slides.size() == 1);
  CHECK(deck.slides[0].title == "Full");
  CHECK_FALSE(diag.warnings().empty());
}

TEST_CASE("a document beyond the context budget overflows before calling out") {
  ScriptedChatProvider provider;
  provider.set_default_response("Slide Title: X\n- y");
  Gateway gateway(provider, no_delay());
  ModelConfig tiny = model();
  tiny.context_budget_tokens = 64;
  tiny.max_output_tokens = 32;
  CHECK_THROWS_AS(run_baseline(BaselineKind::Flat, mini_doc(), 2, gateway, tiny, "d"),
                  ContextOverflow);
  CHECK(provider.call_count() == 0);
}

TEST_CASE("kind names round trip") {
  CHECK(baseline_kind_from_string("flat") == BaselineKind::Flat);
  CHECK(baseline_kind_from_string("cot") == BaselineKind::Cot);
  CHECK(baseline_kind_from_string("cons") == BaselineKind::Cons);
  CHECK_THROWS_AS(baseline_kind_from_string("bogus"), ConfigError);
  CHECK(to_string(BaselineKind::Cons) == "cons");
}

}  // TEST_SUITE
