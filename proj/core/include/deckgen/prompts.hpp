#pragma once

#include <map>
#include <set>
#include <string>

namespace deckgen {

// A chat prompt body with {placeholder} slots. Construction checks that every
// required variable actually occurs in the body.
class PromptTemplate {
 public:
  PromptTemplate(std::string name, std::string body, std::set<std::string> required_vars);

  const std::string& name() const { return name_; }
  const std::string& body() const { return body_; }
  const std::set<std::string>& required_vars() const { return required_vars_; }

 private:
  std::string name_;
  std::string body_;
  std::set<std::string> required_vars_;
};

// Substitutes every occurrence of each declared {var}. Throws MissingVariable
// when vars lacks a required entry. Byte-deterministic.
std::string render(const PromptTemplate& tmpl, const std::map<std::string, std::string>& vars);

// Built-in prompt bodies used by the pipeline stages.
namespace prompts {

const PromptTemplate& summarize();      // vars: n, text
const PromptTemplate& outline();        // vars: text, k
const PromptTemplate& map_slide();      // vars: outline_headings, document_heading_from_bird_eye_view, bird_eye_view
const PromptTemplate& slide_content();  // vars: slide_index, previous_slide, max_bullet, heading, text
const PromptTemplate& baseline_flat();  // vars: number_of_slides, document
const PromptTemplate& baseline_cot();   // vars: number_of_slides, document
const PromptTemplate& baseline_cons();  // vars: number_of_slides, document
const PromptTemplate& judge();          // vars: presentation

}  // namespace prompts

}  // namespace deckgen
