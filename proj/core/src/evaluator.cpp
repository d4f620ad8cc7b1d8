#include "deckgen/evaluator.hpp"

#include <cmath>
#include <cstdlib>

#ifdef DECKGEN_HTTPS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "deckgen/errors.hpp"
#include "deckgen/http_provider.hpp"
#include "deckgen/parsers.hpp"
#include "deckgen/prompts.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

UniformScorer::UniformScorer(long vocab_size) : vocab_size_(vocab_size) {
  if (vocab_size_ < 1) throw ConfigError("vocab_size must be >= 1");
}

std::vector<double> UniformScorer::score(const std::string& text) {
  const std::size_t tokens = std::max<std::size_t>(word_count(text), 1);
  return std::vector<double>(tokens, -std::log(static_cast<double>(vocab_size_)));
}

HttpScorer::HttpScorer(HttpScorerConfig config) : config_(std::move(config)) {}

std::vector<double> HttpScorer::score(const std::string& text) {
  const auto [base, path] = split_endpoint(config_.endpoint);
  httplib::Client client(base);
  client.set_connection_timeout(config_.timeout_sec, 0);
  client.set_read_timeout(config_.timeout_sec, 0);

  httplib::Headers headers;
  if (!config_.api_key_env.empty()) {
    const char* value = std::getenv(config_.api_key_env.c_str());
    if (value == nullptr || *value == '\0') {
      throw ScorerError("environment variable " + config_.api_key_env + " is not set");
    }
    headers.emplace("Authorization", std::string("Bearer ") + value);
  }

  nlohmann::json body = {{"model", config_.model_name}, {"text", text}};
  httplib::Result result = client.Post(path, headers, body.dump(), "application/json");
  if (!result) throw ScorerError("transport failure: " + httplib::to_string(result.error()));
  if (result->status != 200) {
    throw ScorerError("status " + std::to_string(result->status) + ": " + result->body);
  }
  try {
    nlohmann::json reply = nlohmann::json::parse(result->body);
    return reply.at("logprobs").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ScorerError(std::string("malformed scorer body: ") + e.what());
  }
}

namespace {

// Unit-length copy; zero vectors stay zero so they contribute nothing,
// matching cosine_similarity's convention.
std::vector<double> normalized(const EmbeddingVector& v) {
  double norm = 0.0;
  for (double x : v.values) norm += x * x;
  std::vector<double> out(v.values);
  if (norm == 0.0) return out;
  norm = std::sqrt(norm);
  for (double& x : out) x /= norm;
  return out;
}

}  // namespace

double coverage_of_embeddings(const std::vector<EmbeddingVector>& doc_vecs,
                              const std::vector<EmbeddingVector>& deck_vecs) {
  if (doc_vecs.empty()) throw EmptyInput("document units");
  if (deck_vecs.empty()) throw EmptyInput("deck units");
  const std::size_t dim = doc_vecs.front().dimension();
  for (const EmbeddingVector& v : doc_vecs) {
    if (v.dimension() != dim) throw DimensionMismatch(v.dimension(), dim);
  }
  for (const EmbeddingVector& v : deck_vecs) {
    if (v.dimension() != dim) throw DimensionMismatch(v.dimension(), dim);
  }

  // sum of pairwise cosines = dot of the summed unit vectors (bilinearity)
  std::vector<double> doc_sum(dim, 0.0);
  for (const EmbeddingVector& v : doc_vecs) {
    const std::vector<double> unit = normalized(v);
    for (std::size_t i = 0; i < dim; ++i) doc_sum[i] += unit[i];
  }
  std::vector<double> deck_sum(dim, 0.0);
  for (const EmbeddingVector& v : deck_vecs) {
    const std::vector<double> unit = normalized(v);
    for (std::size_t i = 0; i < dim; ++i) deck_sum[i] += unit[i];
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < dim; ++i) dot += doc_sum[i] * deck_sum[i];

  const double pairs = static_cast<double>(doc_vecs.size()) * static_cast<double>(deck_vecs.size());
  return dot / pairs * 100.0;
}

double coverage(const std::vector<std::string>& doc_units,
                const std::vector<std::string>& deck_units, TextEmbedder& embedder) {
  if (doc_units.empty()) throw EmptyInput("document units");
  if (deck_units.empty()) throw EmptyInput("deck units");
  std::vector<EmbeddingVector> doc_vecs;
  doc_vecs.reserve(doc_units.size());
  for (const std::string& unit : doc_units) {
    doc_vecs.push_back(embedder.embed_text(unit.substr(0, embedder.max_text_chars())));
  }
  std::vector<EmbeddingVector> deck_vecs;
  deck_vecs.reserve(deck_units.size());
  for (const std::string& unit : deck_units) {
    deck_vecs.push_back(embedder.embed_text(unit.substr(0, embedder.max_text_chars())));
  }
  return coverage_of_embeddings(doc_vecs, deck_vecs);
}

std::string slide_unit_text(const Slide& slide) {
  std::string text = slide.title;
  for (const std::string& bullet : slide.bullets) {
    text += "\n" + bullet;
  }
  return text;
}

std::vector<std::pair<std::string, double>> per_bullet_perplexity(const Deck& deck,
                                                                  TokenScorer& scorer) {
  std::vector<std::pair<std::string, double>> out;
  for (const Slide& slide : deck.slides) {
    for (const std::string& bullet : slide.bullets) {
      const std::vector<double> logprobs = scorer.score(bullet);
      if (logprobs.empty()) {
        throw ScorerError("empty logprob list for bullet: " + bullet.substr(0, 60));
      }
      double sum = 0.0;
      for (double lp : logprobs) {
        if (lp > 0.0) throw ScorerError("logprob above zero: " + std::to_string(lp));
        sum += lp;
      }
      const double mean = sum / static_cast<double>(logprobs.size());
      out.emplace_back(bullet, std::exp(-mean));
    }
  }
  if (out.empty()) throw EmptyDeck();
  return out;
}

double perplexity(const Deck& deck, TokenScorer& scorer) {
  const auto per_bullet = per_bullet_perplexity(deck, scorer);
  double sum = 0.0;
  for (const auto& [bullet, ppl] : per_bullet) sum += ppl;
  return sum / static_cast<double>(per_bullet.size());
}

std::string serialize_deck_for_judge(const Deck& deck) {
  std::vector<std::string> blocks;
  for (const Slide& slide : deck.slides) {
    std::string block = "Slide Title: " + slide.title + "\nBullet Points:";
    for (const std::string& bullet : slide.bullets) {
      block += "\n" + bullet;
    }
    blocks.push_back(block);
  }
  return join(blocks, "\n\n");
}

int llm_eval(const Deck& deck, Gateway& gateway, const ModelConfig& judge_cfg) {
  const std::string prompt =
      render(prompts::judge(), {{"presentation", serialize_deck_for_judge(deck)}});
  for (int attempt = 0;; ++attempt) {
    const std::string response = gateway.complete(judge_cfg, prompt, /*bypass_cache=*/attempt > 0);
    try {
      return parse_score(response);
    } catch (const NoScoreFound&) {
      if (attempt >= 1) throw;
    }
  }
}

MetricReport evaluate(const Deck& deck, const Document& doc, TextEmbedder& embedder,
                      TokenScorer* scorer, Gateway* judge_gateway, const ModelConfig* judge_cfg,
                      const EvaluateOptions& options) {
  MetricReport report;

  const std::vector<std::string> paragraphs = split_paragraphs(doc);
  std::vector<std::string> sentences;
  for (const std::string& paragraph : paragraphs) {
    for (const std::string& sentence : split_sentences(paragraph)) {
      sentences.push_back(sentence);
    }
  }

  std::vector<std::string> slide_units;
  std::vector<std::string> bullet_units;
  for (const Slide& slide : deck.slides) {
    slide_units.push_back(slide_unit_text(slide));
    for (const std::string& bullet : slide.bullets) bullet_units.push_back(bullet);
  }

  auto embed_all = [&](const std::vector<std::string>& units) {
    std::vector<EmbeddingVector> vecs;
    vecs.reserve(units.size());
    for (const std::string& unit : units) {
      vecs.push_back(embedder.embed_text(unit.substr(0, embedder.max_text_chars())));
    }
    return vecs;
  };

  if (paragraphs.empty()) throw EmptyInput("document units");
  const std::vector<EmbeddingVector> paragraph_vecs = embed_all(paragraphs);
  const std::vector<EmbeddingVector> slide_vecs = embed_all(slide_units);
  report.coverage_paragraph_pct = coverage_of_embeddings(paragraph_vecs, slide_vecs);
  report.coverage_sentence_pct = coverage(sentences, bullet_units, embedder);
  for (const EmbeddingVector& slide_vec : slide_vecs) {
    report.per_slide_coverage_pct.push_back(
        coverage_of_embeddings(paragraph_vecs, {slide_vec}));
  }

  if (!options.skip_ppl) {
    if (scorer == nullptr) throw ScorerError("no scorer configured; use --skip-ppl to omit");
    report.per_bullet_ppl = per_bullet_perplexity(deck, *scorer);
    double sum = 0.0;
    for (const auto& [bullet, ppl] : report.per_bullet_ppl) sum += ppl;
    report.ppl = sum / static_cast<double>(report.per_bullet_ppl.size());
  }
  if (!options.skip_llm_eval) {
    if (judge_gateway == nullptr || judge_cfg == nullptr) {
      throw ConfigError("no judge configured; use --skip-llm-eval to omit");
    }
    report.llm_eval = llm_eval(deck, *judge_gateway, *judge_cfg);
  }
  return report;
}

std::string report_to_json(const MetricReport& report) {
  nlohmann::ordered_json root;
  root["coverage_paragraph_pct"] = report.coverage_paragraph_pct;
  root["coverage_sentence_pct"] = report.coverage_sentence_pct;
  if (report.ppl) {
    root["ppl"] = *report.ppl;
  } else {
    root["ppl"] = nullptr;
  }
  if (report.llm_eval) {
    root["llm_eval"] = *report.llm_eval;
  } else {
    root["llm_eval"] = nullptr;
  }
  root["per_slide_coverage_pct"] = report.per_slide_coverage_pct;
  root["per_bullet_ppl"] = nlohmann::ordered_json::array();
  for (const auto& [bullet, ppl] : report.per_bullet_ppl) {
    root["per_bullet_ppl"].push_back({{"bullet", bullet}, {"ppl", ppl}});
  }
  return root.dump(2) + "\n";
}

std::string report_to_table(const MetricReport& report) {
  char line[128];
  std::string out;
  out += "metric                     value\n";
  out += "-------------------------  ----------\n";
  std::snprintf(line, sizeof line, "%-25s  %10.4f\n", "coverage (paragraph) %",
                report.coverage_paragraph_pct);
  out += line;
  std::snprintf(line, sizeof line, "%-25s  %10.4f\n", "coverage (sentence) %",
                report.coverage_sentence_pct);
  out += line;
  if (report.ppl) {
    std::snprintf(line, sizeof line, "%-25s  %10.4f\n", "perplexity", *report.ppl);
    out += line;
  } else {
    out += "perplexity                    skipped\n";
  }
  if (report.llm_eval) {
    std::snprintf(line, sizeof line, "%-25s  %10d\n", "llm-eval (0-10)", *report.llm_eval);
    out += line;
  } else {
    out += "llm-eval (0-10)               skipped\n";
  }
  return out;
}

}  // namespace deckgen
