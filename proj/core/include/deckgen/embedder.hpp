#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace deckgen {

struct EmbeddingVector {
  std::vector<double> values;
  std::size_t dimension() const { return values.size(); }
};

// Throws EmbedderError on non-finite components.
void validate_embedding(const EmbeddingVector& v);

// Throws DimensionMismatch on unequal dimensions. Zero vectors score 0.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

class TextEmbedder {
 public:
  virtual ~TextEmbedder() = default;
  virtual EmbeddingVector embed_text(const std::string& text) = 0;
  virtual std::size_t dimension() const = 0;
  // texts longer than this are truncated before embedding
  virtual std::size_t max_text_chars() const { return 8192; }
};

// Joint text/image space: both embeddings land in the same dimension so a
// figure can be ranked against slide text by cosine.
class JointEmbedder : public TextEmbedder {
 public:
  virtual EmbeddingVector embed_image(const std::string& image_path) = 0;
};

// Deterministic local embedder: feature hashing of tokens (text) or byte
// windows (images) into a fixed number of signed buckets, L2-normalized.
// No model quality, full reproducibility; the default for offline runs.
class HashEmbedder : public JointEmbedder {
 public:
  explicit HashEmbedder(std::size_t dimension = 256);
  EmbeddingVector embed_text(const std::string& text) override;
  EmbeddingVector embed_image(const std::string& image_path) override;
  std::size_t dimension() const override { return dimension_; }

 private:
  std::size_t dimension_;
};

// Exact-lookup test/offline double. Image entries may be keyed by full path
// or by basename.
class ScriptedEmbedder : public JointEmbedder {
 public:
  explicit ScriptedEmbedder(std::size_t dimension);
  void set_text(const std::string& text, std::vector<double> values);
  void set_image(const std::string& path_or_basename, std::vector<double> values);
  void set_default(std::vector<double> values);

  EmbeddingVector embed_text(const std::string& text) override;
  EmbeddingVector embed_image(const std::string& image_path) override;
  std::size_t dimension() const override { return dimension_; }

 private:
  EmbeddingVector checked(const std::vector<double>& values) const;

  std::size_t dimension_;
  std::map<std::string, std::vector<double>> texts_;
  std::map<std::string, std::vector<double>> images_;
  std::vector<double> default_;
  bool has_default_ = false;
};

// Loads a scripted embedder from JSON:
//   {"dimension": 4,
//    "texts":  {"some slide text": [1,0,0,0]},
//    "images": {"fig1.png": [0,1,0,0]},
//    "default": [0,0,0,1]}
ScriptedEmbedder load_scripted_embedder(const std::string& path);

struct HttpEmbedderConfig {
  std::string endpoint;
  std::string model_name;
  std::string api_key_env;
  std::size_t dimension = 0;  // 0: accept whatever the service returns
  std::size_t text_limit_chars = 8192;
  int timeout_sec = 120;
};

// Remote joint embedder. Text: POST {"model", "input"}; image: POST
// {"model", "input_image_b64"}. Response: {"data":[{"embedding":[...]}]}.
class HttpEmbedder : public JointEmbedder {
 public:
  explicit HttpEmbedder(HttpEmbedderConfig config);
  EmbeddingVector embed_text(const std::string& text) override;
  EmbeddingVector embed_image(const std::string& image_path) override;
  std::size_t dimension() const override { return config_.dimension; }
  std::size_t max_text_chars() const override { return config_.text_limit_chars; }

 private:
  EmbeddingVector post(const std::string& payload);

  HttpEmbedderConfig config_;
};

std::string base64_encode(std::string_view bytes);

}  // namespace deckgen
