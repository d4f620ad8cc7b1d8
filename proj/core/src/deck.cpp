#include "deckgen/deck.hpp"

#include <nlohmann/json.hpp>

#include "deckgen/errors.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

Deck assemble(const std::vector<SlideText>& texts,
              const std::vector<std::optional<ScoredImage>>& images, const SlideMapping& mapping,
              const Document& doc, const GeneratorInfo& generator) {
  if (texts.size() != images.size()) throw LengthMismatch(texts.size(), images.size());
  if (texts.size() != mapping.entries.size()) {
    throw LengthMismatch(texts.size(), mapping.entries.size());
  }

  Deck deck;
  deck.document_title = doc.title;
  deck.generator = generator;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    const SlideText& text = texts[i];
    const MappingEntry& entry = mapping.entries[i];
    Slide slide;
    slide.index = static_cast<int>(i) + 1;
    slide.title = text.title;
    slide.bullets = text.bullets;
    if (images[i]) {
      const Figure* figure = nullptr;
      for (const Figure& f : doc.figures) {
        if (f.id == images[i]->figure_id) {
          figure = &f;
          break;
        }
      }
      if (figure == nullptr) {
        throw InvariantError("slides[" + std::to_string(i) + "].image.figure_id",
                             "figure '" + images[i]->figure_id + "' is not in the document");
      }
      slide.image = SlideImage{figure->id, figure->image_path, images[i]->alpha};
    }
    slide.provenance.section_ids = entry.section_ids;
    slide.provenance.raw_keys = entry.raw_keys;
    slide.provenance.grounded = entry.grounded;
    slide.provenance.flags = text.flags;
    deck.slides.push_back(std::move(slide));
  }
  return deck;
}

namespace {

using nlohmann::ordered_json;

std::vector<std::string> flags_to_strings(const std::set<SlideFlag>& flags) {
  std::vector<std::string> out;
  for (SlideFlag flag : flags) out.push_back(to_string(flag));
  return out;
}

}  // namespace

std::string emit_structured(const Deck& deck) {
  ordered_json root;
  root["document_title"] = deck.document_title;
  root["generator"] = {
      {"pipeline", deck.generator.pipeline},
      {"model_name", deck.generator.model_name},
      {"config_digest", deck.generator.config_digest},
  };
  root["slides"] = ordered_json::array();
  for (const Slide& slide : deck.slides) {
    ordered_json s;
    s["index"] = slide.index;
    s["title"] = slide.title;
    s["bullets"] = slide.bullets;
    if (slide.image) {
      s["image"] = {
          {"figure_id", slide.image->figure_id},
          {"image_path", slide.image->image_path},
          {"alpha", slide.image->alpha},
      };
    } else {
      s["image"] = nullptr;
    }
    s["provenance"] = {
        {"section_ids", slide.provenance.section_ids},
        {"raw_keys", slide.provenance.raw_keys},
        {"grounded", slide.provenance.grounded},
        {"flags", flags_to_strings(slide.provenance.flags)},
    };
    root["slides"].push_back(std::move(s));
  }
  return root.dump(2) + "\n";
}

namespace {

const nlohmann::json& need(const nlohmann::json& obj, const std::string& key,
                           const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing required field");
  return *it;
}

std::string need_string(const nlohmann::json& obj, const std::string& key,
                        const std::string& path) {
  const auto& v = need(obj, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> need_string_array(const nlohmann::json& obj, const std::string& key,
                                           const std::string& path) {
  const auto& v = need(obj, key, path);
  if (!v.is_array()) throw SchemaError(path + "." + key, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      throw SchemaError(path + "." + key + "[" + std::to_string(i) + "]", "expected a string");
    }
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

}  // namespace

Deck load_structured(const std::string& json_text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("$", "expected a top-level object");

  Deck deck;
  deck.document_title = need_string(root, "document_title", "$");
  const auto& generator = need(root, "generator", "$");
  deck.generator.pipeline = need_string(generator, "pipeline", "generator");
  deck.generator.model_name = need_string(generator, "model_name", "generator");
  deck.generator.config_digest = need_string(generator, "config_digest", "generator");

  const auto& slides = need(root, "slides", "$");
  if (!slides.is_array()) throw SchemaError("slides", "expected an array");
  for (std::size_t i = 0; i < slides.size(); ++i) {
    const std::string path = "slides[" + std::to_string(i) + "]";
    const auto& s = slides[i];
    if (!s.is_object()) throw SchemaError(path, "expected a slide object");

    Slide slide;
    const auto& index = need(s, "index", path);
    if (!index.is_number_integer()) throw SchemaError(path + ".index", "expected an integer");
    slide.index = index.get<int>();
    if (slide.index != static_cast<int>(i) + 1) {
      throw InvariantError(path + ".index", "slide indices must be contiguous from 1");
    }
    slide.title = need_string(s, "title", path);
    slide.bullets = need_string_array(s, "bullets", path);
    if (slide.bullets.empty()) {
      throw InvariantError(path + ".bullets", "a slide needs at least one bullet");
    }

    if (auto it = s.find("image"); it != s.end() && !it->is_null()) {
      if (!it->is_object()) throw SchemaError(path + ".image", "expected an object or null");
      SlideImage image;
      image.figure_id = need_string(*it, "figure_id", path + ".image");
      image.image_path = need_string(*it, "image_path", path + ".image");
      const auto& alpha = need(*it, "alpha", path + ".image");
      if (!alpha.is_number()) throw SchemaError(path + ".image.alpha", "expected a number");
      image.alpha = alpha.get<double>();
      slide.image = std::move(image);
    }

    const auto& provenance = need(s, "provenance", path);
    if (!provenance.is_object()) throw SchemaError(path + ".provenance", "expected an object");
    slide.provenance.section_ids =
        need_string_array(provenance, "section_ids", path + ".provenance");
    slide.provenance.raw_keys = need_string_array(provenance, "raw_keys", path + ".provenance");
    const auto& grounded = need(provenance, "grounded", path + ".provenance");
    if (!grounded.is_boolean()) {
      throw SchemaError(path + ".provenance.grounded", "expected a boolean");
    }
    slide.provenance.grounded = grounded.get<bool>();
    for (const std::string& name :
         need_string_array(provenance, "flags", path + ".provenance")) {
      const auto flag = slide_flag_from_string(name);
      if (!flag) throw SchemaError(path + ".provenance.flags", "unknown flag '" + name + "'");
      slide.provenance.flags.insert(*flag);
    }
    deck.slides.push_back(std::move(slide));
  }
  return deck;
}

std::string emit_markdown(const Deck& deck) {
  std::string out = "# " + deck.document_title + "\n";
  for (const Slide& slide : deck.slides) {
    out += "\n## " + slide.title + "\n\n";
    for (const std::string& bullet : slide.bullets) {
      out += "- " + bullet + "\n";
    }
    if (slide.image) {
      out += "\n![" + slide.image->figure_id + "](" + slide.image->image_path + ")\n";
    }
    std::string flags = join(flags_to_strings(slide.provenance.flags), ",");
    out += "<!-- provenance: sections=[" + join(slide.provenance.section_ids, ",") +
           "] grounded=" + (slide.provenance.grounded ? "true" : "false") +
           " flags=[" + flags + "] -->\n";
  }
  return out;
}

}  // namespace deckgen
