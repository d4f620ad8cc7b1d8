#pragma once

#include <stdexcept>
#include <string>

namespace deckgen {

// Base of everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Input file does not match the canonical schema (missing field, wrong type).
// `path` names the offending location, e.g. "sections[1].bbox.page".
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Structurally valid input that violates a domain invariant (duplicate id,
// degenerate bounding box, empty title, ...).
class InvariantError : public Error {
 public:
  InvariantError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class UnknownSectionId : public Error {
 public:
  explicit UnknownSectionId(std::string id)
      : Error("unknown section id: " + id), id_(std::move(id)) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class MissingVariable : public Error {
 public:
  explicit MissingVariable(std::string name)
      : Error("missing template variable: " + name), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Prompt would not fit the model's context budget. Raised before any
// network traffic happens.
class ContextOverflow : public Error {
 public:
  ContextOverflow(long estimated_tokens, long available_tokens)
      : Error("prompt estimate of " + std::to_string(estimated_tokens) +
              " tokens exceeds the available budget of " +
              std::to_string(available_tokens) + " tokens"),
        estimated_tokens_(estimated_tokens),
        available_tokens_(available_tokens) {}
  long estimated_tokens() const { return estimated_tokens_; }
  long available_tokens() const { return available_tokens_; }

 private:
  long estimated_tokens_;
  long available_tokens_;
};

class ProviderError : public Error {
 public:
  ProviderError(int status, std::string body)
      : Error("provider error, status " + std::to_string(status) + ": " + body),
        status_(status),
        body_(std::move(body)) {}
  int status() const { return status_; }
  const std::string& body() const { return body_; }

 private:
  int status_;
  std::string body_;
};

class EmptyList : public Error {
 public:
  EmptyList() : Error("no list items found") {}
};

class NoScoreFound : public Error {
 public:
  NoScoreFound() : Error("no integer score in [0,10] found") {}
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& what) : Error("empty input: " + what) {}
};

class EmptyDeck : public Error {
 public:
  EmptyDeck() : Error("deck has no bullets to score") {}
};

class ScorerError : public Error {
 public:
  explicit ScorerError(const std::string& message) : Error("scorer: " + message) {}
};

class EmbedderError : public Error {
 public:
  explicit EmbedderError(const std::string& message) : Error("embedder: " + message) {}
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("embedding dimensions differ: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : Error("aligned inputs differ in length: " + std::to_string(lhs) +
              " vs " + std::to_string(rhs)) {}
};

class OutlineGenerationFailed : public Error {
 public:
  explicit OutlineGenerationFailed(const std::string& message)
      : Error("outline generation failed: " + message) {}
};

class SlideGenerationFailed : public Error {
 public:
  explicit SlideGenerationFailed(int slide_index)
      : Error("slide " + std::to_string(slide_index) + ": no usable bullets"),
        slide_index_(slide_index) {}
  int slide_index() const { return slide_index_; }

 private:
  int slide_index_;
};

class ParseFailure : public Error {
 public:
  explicit ParseFailure(const std::string& message)
      : Error("parse failure: " + message) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error("config: " + message) {}
};

}  // namespace deckgen
