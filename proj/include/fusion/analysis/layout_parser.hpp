#pragma once

#include <string>
#include <vector>

#include "fusion/types.hpp"

namespace fusion::analysis {

struct ParsedNode {
  // descriptor_id, containing_activities and declaring_sources are left
  // empty; build_component_universe fills them in.
  ComponentDescriptor descriptor;
  std::string node_path;
};

struct ParsedFile {
  std::vector<ParsedNode> nodes;  // document order
  std::vector<std::string> warnings;
};

// Layout files: `screen` containers holding button, spinner, checkbox,
// text_field, list_item, image, generic. Unknown tags become GENERIC with a
// warning. Throws ParseError carrying line/column for malformed markup or
// bad attribute values.
ParsedFile parse_layout_file(const std::string& contents, const std::string& file_name);

// Menu files: `menu` containers holding `item` nodes (MENU_ITEM, CLICK).
ParsedFile parse_menu_file(const std::string& contents, const std::string& file_name);

}  // namespace fusion::analysis
