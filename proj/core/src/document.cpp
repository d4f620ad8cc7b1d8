#include "deckgen/document.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "deckgen/errors.hpp"
#include "deckgen/text_util.hpp"

namespace deckgen {

namespace {

using nlohmann::json;

void warn_unknown_keys(const json& obj, const std::set<std::string>& known,
                       const std::string& path, Diagnostics* diag) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!known.count(key)) {
      warn(diag, path + ": ignoring unknown key '" + key + "'");
    }
  }
}

const json& require_key(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing required field");
  return *it;
}

std::string require_string(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require_key(obj, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
  return v.get<std::string>();
}

int require_int(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require_key(obj, key, path);
  if (!v.is_number_integer()) throw SchemaError(path + "." + key, "expected an integer");
  return v.get<int>();
}

double require_number(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require_key(obj, key, path);
  if (!v.is_number()) throw SchemaError(path + "." + key, "expected a number");
  return v.get<double>();
}

BoundingBox parse_bbox(const json& obj, const std::string& path, Diagnostics* diag) {
  if (!obj.is_object()) throw SchemaError(path, "expected a bbox object");
  warn_unknown_keys(obj, {"page", "x0", "y0", "x1", "y1"}, path, diag);
  BoundingBox box;
  box.page = require_int(obj, "page", path);
  box.x0 = require_number(obj, "x0", path);
  box.y0 = require_number(obj, "y0", path);
  box.x1 = require_number(obj, "x1", path);
  box.y1 = require_number(obj, "y1", path);
  if (box.page < 1) throw InvariantError(path + ".page", "pages are 1-based");
  if (box.x0 < 0 || box.y0 < 0) throw InvariantError(path, "coordinates must be non-negative");
  if (!(box.x0 < box.x1)) throw InvariantError(path, "x0 must be < x1");
  if (!(box.y0 < box.y1)) throw InvariantError(path, "y0 must be < y1");
  return box;
}

Section parse_section(const json& obj, const std::string& path, int expected_level,
                      std::set<std::string>& seen_ids, Diagnostics* diag) {
  if (!obj.is_object()) throw SchemaError(path, "expected a section object");
  warn_unknown_keys(obj, {"id", "title", "level", "body", "bbox", "children"}, path, diag);

  Section section;
  section.id = require_string(obj, "id", path);
  if (section.id.empty()) throw InvariantError(path + ".id", "id must be non-empty");
  if (!seen_ids.insert(section.id).second) {
    throw InvariantError(path + ".id", "duplicate section id '" + section.id + "'");
  }
  section.title = require_string(obj, "title", path);
  if (trim(section.title).empty()) {
    throw InvariantError(path + ".title", "title must be non-empty");
  }
  section.level = require_int(obj, "level", path);
  if (section.level < 1) throw InvariantError(path + ".level", "level must be >= 1");
  if (section.level != expected_level) {
    throw InvariantError(path + ".level",
                         "expected level " + std::to_string(expected_level) +
                             ", got " + std::to_string(section.level));
  }
  if (auto it = obj.find("body"); it != obj.end()) {
    if (!it->is_string()) throw SchemaError(path + ".body", "expected a string");
    section.body = it->get<std::string>();
  }
  section.position = parse_bbox(require_key(obj, "bbox", path), path + ".bbox", diag);

  if (auto it = obj.find("children"); it != obj.end()) {
    if (!it->is_array()) throw SchemaError(path + ".children", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      section.children.push_back(parse_section((*it)[i],
                                               path + ".children[" + std::to_string(i) + "]",
                                               expected_level + 1, seen_ids, diag));
    }
  }
  return section;
}

Figure parse_figure(const json& obj, const std::string& path,
                    std::set<std::string>& seen_ids, Diagnostics* diag) {
  if (!obj.is_object()) throw SchemaError(path, "expected a figure object");
  warn_unknown_keys(obj, {"id", "image_path", "bbox", "width_px", "height_px", "caption"},
                    path, diag);

  Figure figure;
  figure.id = require_string(obj, "id", path);
  if (figure.id.empty()) throw InvariantError(path + ".id", "id must be non-empty");
  if (!seen_ids.insert(figure.id).second) {
    throw InvariantError(path + ".id", "duplicate figure id '" + figure.id + "'");
  }
  figure.image_path = require_string(obj, "image_path", path);
  figure.position = parse_bbox(require_key(obj, "bbox", path), path + ".bbox", diag);
  figure.width_px = require_int(obj, "width_px", path);
  figure.height_px = require_int(obj, "height_px", path);
  if (figure.width_px <= 0) throw InvariantError(path + ".width_px", "must be positive");
  if (figure.height_px <= 0) throw InvariantError(path + ".height_px", "must be positive");
  if (auto it = obj.find("caption"); it != obj.end()) {
    if (!it->is_string()) throw SchemaError(path + ".caption", "expected a string");
    figure.caption = it->get<std::string>();
  }
  return figure;
}

int max_section_page(const std::vector<Section>& sections) {
  int page = 0;
  for (const Section& s : sections) {
    page = std::max(page, s.position.page);
    page = std::max(page, max_section_page(s.children));
  }
  return page;
}

void hash_figure_contents(Document& doc, Diagnostics* diag) {
  for (std::size_t i = 0; i < doc.figures.size(); ++i) {
    Figure& figure = doc.figures[i];
    const std::string resolved = resolve_image_path(doc, figure);
    std::ifstream in(resolved, std::ios::binary);
    if (!in) {
      warn(diag, "figures[" + std::to_string(i) + "]: image file '" + resolved +
                     "' is not readable; content hash left empty");
      continue;
    }
    std::ostringstream bytes;
    bytes << in.rdbuf();
    figure.content_hash = fnv1a64_hex(bytes.str());
  }
}

}  // namespace

Document parse_document_text(const std::string& json_text, const std::string& base_dir,
                             Diagnostics* diag) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("$", "expected a top-level object");
  warn_unknown_keys(root, {"title", "sections", "figures"}, "$", diag);

  Document doc;
  doc.base_dir = base_dir;
  doc.title = require_string(root, "title", "$");

  const json& sections = require_key(root, "sections", "$");
  if (!sections.is_array()) throw SchemaError("sections", "expected an array");
  std::set<std::string> section_ids;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    doc.sections.push_back(parse_section(sections[i], "sections[" + std::to_string(i) + "]",
                                         1, section_ids, diag));
  }
  if (doc.sections.empty()) throw InvariantError("sections", "a document needs at least one section");

  if (auto it = root.find("figures"); it != root.end()) {
    if (!it->is_array()) throw SchemaError("figures", "expected an array");
    std::set<std::string> figure_ids;
    for (std::size_t i = 0; i < it->size(); ++i) {
      doc.figures.push_back(parse_figure((*it)[i], "figures[" + std::to_string(i) + "]",
                                         figure_ids, diag));
    }
  }

  const int last_section_page = max_section_page(doc.sections);
  for (std::size_t i = 0; i < doc.figures.size(); ++i) {
    if (doc.figures[i].position.page > last_section_page) {
      throw InvariantError("figures[" + std::to_string(i) + "].bbox.page",
                           "figure page " + std::to_string(doc.figures[i].position.page) +
                               " is beyond the last section page " +
                               std::to_string(last_section_page));
    }
  }

  hash_figure_contents(doc, diag);
  return doc;
}

Document parse_document(const std::string& path, Diagnostics* diag) {
  const std::string text = read_file(path);
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  return parse_document_text(text, parent.empty() ? "." : parent.string(), diag);
}

namespace {

void flatten_into(const Section& section, std::vector<FlatSection>& out) {
  out.push_back({section.id, section.title, section.level, section.body});
  for (const Section& child : section.children) flatten_into(child, out);
}

const Section* find_in(const std::vector<Section>& sections, const std::string& id) {
  for (const Section& s : sections) {
    if (s.id == id) return &s;
    if (const Section* hit = find_in(s.children, id)) return hit;
  }
  return nullptr;
}

void subtree_page_span(const Section& section, int& min_page, int& max_page) {
  min_page = std::min(min_page, section.position.page);
  max_page = std::max(max_page, section.position.page);
  for (const Section& child : section.children) subtree_page_span(child, min_page, max_page);
}

}  // namespace

std::vector<FlatSection> flatten_sections(const Document& doc) {
  std::vector<FlatSection> out;
  for (const Section& s : doc.sections) flatten_into(s, out);
  return out;
}

std::size_t section_count(const Document& doc) { return flatten_sections(doc).size(); }

const Section* find_section(const Document& doc, const std::string& id) {
  return find_in(doc.sections, id);
}

std::pair<int, int> section_page_span(const Document& doc,
                                      const std::vector<std::string>& section_ids) {
  int min_page = std::numeric_limits<int>::max();
  int max_page = std::numeric_limits<int>::min();
  for (const std::string& id : section_ids) {
    const Section* section = find_section(doc, id);
    if (section == nullptr) throw UnknownSectionId(id);
    subtree_page_span(*section, min_page, max_page);
  }
  if (section_ids.empty()) return {0, 0};
  return {min_page, max_page};
}

std::vector<std::string> section_order(const Document& doc) {
  std::vector<std::string> ids;
  for (const FlatSection& flat : flatten_sections(doc)) ids.push_back(flat.id);
  return ids;
}

std::string resolve_image_path(const Document& doc, const Figure& figure) {
  const std::filesystem::path p(figure.image_path);
  if (p.is_absolute() || doc.base_dir.empty()) return figure.image_path;
  return (std::filesystem::path(doc.base_dir) / p).string();
}

}  // namespace deckgen
