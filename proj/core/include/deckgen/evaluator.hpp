#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deckgen/deck.hpp"
#include "deckgen/document.hpp"
#include "deckgen/embedder.hpp"
#include "deckgen/gateway.hpp"
#include "deckgen/text_units.hpp"

namespace deckgen {

// Per-token natural-log probabilities of a text under a reference language
// model. Every logprob is <= 0; non-empty text scores a non-empty list.
class TokenScorer {
 public:
  virtual ~TokenScorer() = default;
  virtual std::vector<double> score(const std::string& text) = 0;
};

// Every token scores -ln(vocab_size): an analytic fixture whose perplexity
// equals the vocabulary size. Doubles as the offline default.
class UniformScorer : public TokenScorer {
 public:
  explicit UniformScorer(long vocab_size);
  std::vector<double> score(const std::string& text) override;
  long vocab_size() const { return vocab_size_; }

 private:
  long vocab_size_;
};

struct HttpScorerConfig {
  std::string endpoint;
  std::string model_name;
  std::string api_key_env;
  int timeout_sec = 120;
};

// Remote scorer: POST {"model", "text"} -> {"logprobs": [...]} (natural log).
class HttpScorer : public TokenScorer {
 public:
  explicit HttpScorer(HttpScorerConfig config);
  std::vector<double> score(const std::string& text) override;

 private:
  HttpScorerConfig config_;
};

struct MetricReport {
  double coverage_paragraph_pct = 0.0;
  double coverage_sentence_pct = 0.0;
  std::optional<double> ppl;
  std::optional<int> llm_eval;
  std::vector<double> per_slide_coverage_pct;  // slide vs. document paragraphs
  std::vector<std::pair<std::string, double>> per_bullet_ppl;
};

// Mean pairwise cosine over all (doc unit, deck unit) pairs, times 100.
// Throws EmptyInput when either side is empty.
double coverage(const std::vector<std::string>& doc_units,
                const std::vector<std::string>& deck_units, TextEmbedder& embedder);

// Same fold over precomputed embeddings; the text overload delegates here.
double coverage_of_embeddings(const std::vector<EmbeddingVector>& doc_vecs,
                              const std::vector<EmbeddingVector>& deck_vecs);

// Whole-slide text for paragraph-level coverage: title plus bullets.
std::string slide_unit_text(const Slide& slide);

// exp(-mean(logprobs)) per bullet, averaged over all bullets of the deck.
// Throws EmptyDeck when no bullet exists, ScorerError on bad scorer output.
double perplexity(const Deck& deck, TokenScorer& scorer);
std::vector<std::pair<std::string, double>> per_bullet_perplexity(const Deck& deck,
                                                                  TokenScorer& scorer);

// "Slide Title:/Bullet Points:" blocks fed to the judge prompt.
std::string serialize_deck_for_judge(const Deck& deck);

// 0-10 holistic score from the judge model; one retry on an unparseable
// response, then NoScoreFound.
int llm_eval(const Deck& deck, Gateway& gateway, const ModelConfig& judge_cfg);

struct EvaluateOptions {
  bool skip_ppl = false;
  bool skip_llm_eval = false;
};

MetricReport evaluate(const Deck& deck, const Document& doc, TextEmbedder& embedder,
                      TokenScorer* scorer, Gateway* judge_gateway, const ModelConfig* judge_cfg,
                      const EvaluateOptions& options);

std::string report_to_json(const MetricReport& report);
std::string report_to_table(const MetricReport& report);

}  // namespace deckgen
