#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deckgen/diagnostics.hpp"

namespace deckgen {

// Positions are 1-based pages with top-left-origin coordinates in points.
struct BoundingBox {
  int page = 1;
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;
};

struct Section {
  std::string id;
  std::string title;
  int level = 1;  // 1 = top section, 2 = subsection, ...
  std::string body;  // may be empty for container headings
  BoundingBox position;
  std::vector<Section> children;

  bool is_leaf() const { return children.empty(); }
};

struct Figure {
  std::string id;
  std::string image_path;  // as written in the extraction file
  BoundingBox position;
  int width_px = 0;
  int height_px = 0;
  std::optional<std::string> caption;
  std::string content_hash;  // digest of image bytes; empty when unreadable
};

struct Document {
  std::string title;
  std::vector<Section> sections;  // tree roots, level 1
  std::vector<Figure> figures;
  std::string base_dir;  // resolves relative image paths
};

struct FlatSection {
  std::string id;
  std::string title;
  int level = 1;
  std::string body;
};

// Reads and validates a canonical extraction file. Unknown keys are ignored
// with a warning. Throws SchemaError / InvariantError naming the offending
// path.
Document parse_document(const std::string& path, Diagnostics* diag = nullptr);
Document parse_document_text(const std::string& json_text,
                             const std::string& base_dir = ".",
                             Diagnostics* diag = nullptr);

// Depth-first pre-order traversal; result length equals the node count M.
std::vector<FlatSection> flatten_sections(const Document& doc);

std::size_t section_count(const Document& doc);

const Section* find_section(const Document& doc, const std::string& id);

// Min/max heading page over the named sections and their subtrees.
std::pair<int, int> section_page_span(const Document& doc,
                                      const std::vector<std::string>& section_ids);

// Pre-order rank of every section id; used wherever "document order" matters.
std::vector<std::string> section_order(const Document& doc);

std::string resolve_image_path(const Document& doc, const Figure& figure);

}  // namespace deckgen
