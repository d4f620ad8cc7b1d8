#include "deckgen/prompts.hpp"

#include "deckgen/errors.hpp"

namespace deckgen {

PromptTemplate::PromptTemplate(std::string name, std::string body,
                               std::set<std::string> required_vars)
    : name_(std::move(name)), body_(std::move(body)), required_vars_(std::move(required_vars)) {
  for (const std::string& var : required_vars_) {
    if (body_.find("{" + var + "}") == std::string::npos) {
      throw MissingVariable(var);
    }
  }
}

std::string render(const PromptTemplate& tmpl, const std::map<std::string, std::string>& vars) {
  std::string out = tmpl.body();
  for (const std::string& var : tmpl.required_vars()) {
    auto it = vars.find(var);
    if (it == vars.end()) throw MissingVariable(var);
    const std::string slot = "{" + var + "}";
    std::size_t pos = 0;
    while ((pos = out.find(slot, pos)) != std::string::npos) {
      out.replace(pos, slot.size(), it->second);
      pos += it->second.size();
    }
  }
  return out;
}

namespace prompts {

const PromptTemplate& summarize() {
  static const PromptTemplate t(
      "summarize",
      "Summarize the following text in at most {n} words, preserving key claims "
      "and terminology:\n\n{text}",
      {"n", "text"});
  return t;
}

const PromptTemplate& outline() {
  static const PromptTemplate t(
      "outline",
      "From the following text which contains a set of headings and some content "
      "within each heading:\n"
      "\n"
      "{text}\n"
      "\n"
      "Extract the most important headings present in it.\n"
      "Reduce the length of each heading to five words if they are lengthy.\n"
      "Return exactly {k} headings as a numbered list.",
      {"text", "k"});
  return t;
}

const PromptTemplate& map_slide() {
  static const PromptTemplate t(
      "map_slide",
      "Think step by step\n"
      "\n"
      "You are given with the following title:\n"
      "{outline_headings}\n"
      "\n"
      "and a list of keys:\n"
      "{document_heading_from_bird_eye_view}\n"
      "\n"
      "Each key is associated with some text as presented in the dictionary format "
      "below:\n"
      "{bird_eye_view}\n"
      "\n"
      "The task is to find 1-2 significantly matched keys. The matching should be "
      "done based on the similarity of the text associated with the keys with the "
      "given heading.\n"
      "Matching keys are: <semicolon separated list if more than a single key>",
      {"outline_headings", "document_heading_from_bird_eye_view", "bird_eye_view"});
  return t;
}

const PromptTemplate& slide_content() {
  static const PromptTemplate t(
      "slide_content",
      "You are a presentation generator from a source of text. You have to generate "
      "the slide number {slide_index}.\n"
      "Previous slide headings and slide contents are given below in the format of a "
      "list of dictionaries.\n"
      "{previous_slide}\n"
      "Given the following slide heading and the source of text respectively, create "
      "the content of the slide number {slide_index} such that:\n"
      "1. The slide should have maximum {max_bullet} bullet points.\n"
      "2. Ensure that the content of the bullet points are coming strictly from the "
      "given source of text only.\n"
      "3. The content of the slide is very relevant to the given slide heading\n"
      "4. Each bullet point should have a maximum of 10 words\n"
      "5. Ensure that this slide does not have any content repeated from the "
      "previous slides.\n"
      "6. The flow of the overall presentation is nice.\n"
      "7. Do not prefix the slide title before the bullet points in the output\n"
      "\n"
      "Slide Title: {heading}\n"
      "\n"
      "Source of text: {text}",
      {"slide_index", "previous_slide", "max_bullet", "heading", "text"});
  return t;
}

const PromptTemplate& baseline_flat() {
  static const PromptTemplate t(
      "baseline_flat",
      "You're an AI assistant that will help create a presentation from a document. "
      "You will be given section heading and paragraphs in that section. Your task "
      "is to create a presentation with ONLY {number_of_slides} slides from "
      "the document. For every slide, output the slide title and bullet points in the "
      "slides. Please follow the following structure in the output. Do not "
      "output slide number.\n"
      "Slide Title: The slide title\n"
      "Bullet Points:\n"
      "New line separated bullet points\n"
      "\n"
      "Following is the document, which contains section heading and paragraphs "
      "under that heading.\n"
      "----------Document Started----------\n"
      "{document}\n"
      "----------Document Ended----------\n"
      "\n"
      "Presentation (only {number_of_slides} slides):",
      {"number_of_slides", "document"});
  return t;
}

const PromptTemplate& baseline_cot() {
  static const PromptTemplate t(
      "baseline_cot",
      "You're an AI assistant that will help create a presentation from a document. You "
      "will be given section heading and paragraphs in that section. Your task is to create "
      "a presentation with ONLY {number_of_slides} slides from the document. For "
      "every slide, output the slide title and bullet points in the slides. Please follow the "
      "steps provided below.\n"
      "1. Begin by thoroughly reading and understanding the document. Identify the "
      "main points, key messages, and supporting details.\n"
      "2. Find relations between different paragraphs that could be presented in the "
      "same slide.\n"
      "3. Create a high-level outline for your presentation. Identify the main sections or "
      "topics that you'll cover. This will serve as the skeleton for your slides.\n"
      "4. Choose the most important information from the document to include in your "
      "presentation. Focus on key messages and supporting details that align with your "
      "presentation objectives.\n"
      "5. Organize the selected content into slides, maintaining a logical flow. Each "
      "slide should represent a clear point or topic, and the overall structure should make "
      "sense to your audience.\n"
      "6. Make sure slides are descriptive.\n"
      "7. Presentation should have only {number_of_slides} slides.\n"
      "8. Please follow the following structure. Do not output slide number.\n"
      "Slide Title: The slide title\n"
      "Bullet Points:\n"
      "New line separated bullet points\n"
      "\n"
      "Following is the document, which contains section heading and paragraphs under "
      "that heading.\n"
      "----------Document Started----------\n"
      "{document}\n"
      "----------Document Ended----------\n"
      "\n"
      "Presentation:",
      {"number_of_slides", "document"});
  return t;
}

const PromptTemplate& baseline_cons() {
  static const PromptTemplate t(
      "baseline_cons",
      "You're an AI assistant that will help create a presentation from a document. "
      "You will be given section heading and paragraphs in that section. Your task "
      "is to create a presentation with ONLY {number_of_slides} slides from the "
      "document. For every slide, output the slide title and bullet points in the slides. "
      "Please follow the steps provided below.\n"
      "1. Begin by thoroughly reading and understanding the document. Identify the "
      "main points, key messages, and supporting details.\n"
      "2. Find relations between different paragraphs that could be presented in the "
      "same slide.\n"
      "3. Create a high-level outline for your presentation. Identify the main sections "
      "or topics that you'll cover. This will serve as the skeleton for your slides.\n"
      "4. Choose the most important information from the document to include in "
      "your presentation. Focus on key messages and supporting details that align "
      "with your presentation objectives.\n"
      "5. Organize the selected content into slides, maintaining a logical flow. Each "
      "slide should represent a clear point or topic, and the overall structure should "
      "make sense to your audience.\n"
      "6. Make sure slides are descriptive.\n"
      "7. Presentation should have only {number_of_slides} slides.\n"
      "8. Each slide should have around 7 bullet points. Each bullet point should "
      "have around 15 words.\n"
      "9. Please follow the following structure. Do not output slide number.\n"
      "Slide Title: The slide title\n"
      "Bullet Points:\n"
      "New line separated bullet points\n"
      "\n"
      "Following is the document, which contains section heading and paragraphs "
      "under that heading.\n"
      "----------Document Started----------\n"
      "{document}\n"
      "----------Document Ended----------\n"
      "\n"
      "Presentation:",
      {"number_of_slides", "document"});
  return t;
}

const PromptTemplate& judge() {
  static const PromptTemplate t(
      "judge",
      "On a scale of 0-10, rate the effectiveness, clarity, and overall quality of "
      "the following text presentation, considering factors such as organization, "
      "coherence, and the ability to convey complex ideas to the audience. "
      "0 is the lowest score, whereas 10 is the highest score.\n"
      "\n"
      "Presentation:\n"
      "{presentation}\n"
      "\n"
      "Score (an integer between 0 and 10):",
      {"presentation"});
  return t;
}

}  // namespace prompts

}  // namespace deckgen
