#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusion/types.hpp"

namespace fusion::dynamic {

struct ComponentDecl {
  std::string id;   // resource id, may be empty
  std::string key;  // simulator-local handle for edges, may be empty
  ComponentType type = ComponentType::kGeneric;
  std::string text;
  Rect bounds;
  bool clickable = false;
  bool long_clickable = false;
  bool editable = false;
  bool swipeable = false;

  // Edge handle: key when set, else the resource id.
  const std::string& handle() const { return key.empty() ? id : key; }
};

struct ScreenDecl {
  std::string name;
  std::string activity;  // defaults to the screen name
  std::string window;    // defaults to the screen name
  std::vector<ComponentDecl> components;
};

struct EdgeDecl {
  std::string from;
  std::string component;  // handle on `from`
  std::string to;
};

// Ground-truth script for the simulator.
struct BehaviorModel {
  std::string initial;
  Size screen_dims{360, 640};
  std::map<std::string, ScreenDecl> screens;
  std::vector<EdgeDecl> edges;

  const ScreenDecl& screen(const std::string& name) const;
  // Index of the component an edge handle names on a screen.
  std::optional<std::size_t> find_handle(const ScreenDecl& screen, const std::string& handle) const;
  // Target screen of clicking component `index` on `screen`, or nullopt.
  std::optional<std::string> edge_target(const std::string& screen, std::size_t index) const;
};

// Parses behavior.json and checks it: initial screen exists, edge endpoints
// exist, each edge names exactly one clickable component, at most one edge
// per (screen, component), bounds non-empty and on screen.
// Throws ParseError or Error(kValidation).
BehaviorModel parse_behavior(const std::string& json_text,
                             const std::string& file_name = "behavior.json");

}  // namespace fusion::dynamic
