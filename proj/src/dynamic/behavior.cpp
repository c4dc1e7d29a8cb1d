#include "fusion/dynamic/behavior.hpp"

#include <cctype>
#include <set>

#include <json.hpp>

#include "fusion/error.hpp"

namespace fusion::dynamic {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& file, const std::string& what) {
  throw Error(ErrorCode::kValidation, file + ": " + what);
}

ComponentType parse_type(const std::string& name, const std::string& file) {
  std::string upper;
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (auto type = parse_component_type(upper)) return *type;
  invalid(file, "unknown component type '" + name + "'");
}

Rect parse_bounds(const json& value, const std::string& file) {
  if (!value.is_array() || value.size() != 4) invalid(file, "bounds must be [x, y, w, h]");
  for (const auto& v : value) {
    if (!v.is_number_integer()) invalid(file, "bounds must be integers");
  }
  return {value[0].get<int>(), value[1].get<int>(), value[2].get<int>(), value[3].get<int>()};
}

ComponentDecl parse_component(const json& value, const std::string& file) {
  if (!value.is_object()) invalid(file, "component declarations must be objects");
  ComponentDecl c;
  c.id = value.value("id", "");
  c.key = value.value("key", "");
  if (!value.contains("type")) invalid(file, "component without a type");
  c.type = parse_type(value.at("type").get<std::string>(), file);
  c.text = value.value("text", "");
  if (!value.contains("bounds")) invalid(file, "component without bounds");
  c.bounds = parse_bounds(value.at("bounds"), file);
  const bool default_click = c.type == ComponentType::kButton || c.type == ComponentType::kMenuItem;
  c.clickable = value.value("clickable", default_click);
  c.long_clickable = value.value("long_clickable", false);
  c.editable = value.value("editable", false);
  c.swipeable = value.value("swipeable", false);
  return c;
}

}  // namespace

const ScreenDecl& BehaviorModel::screen(const std::string& name) const {
  auto it = screens.find(name);
  if (it == screens.end()) throw Error(ErrorCode::kNotFound, "no screen named '" + name + "'");
  return it->second;
}

std::optional<std::size_t> BehaviorModel::find_handle(const ScreenDecl& screen,
                                                      const std::string& handle) const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < screen.components.size(); ++i) {
    if (!handle.empty() && screen.components[i].handle() == handle) {
      if (found) return std::nullopt;  // ambiguous
      found = i;
    }
  }
  return found;
}

std::optional<std::string> BehaviorModel::edge_target(const std::string& screen_name,
                                                      std::size_t index) const {
  const ScreenDecl& s = screen(screen_name);
  if (index >= s.components.size()) return std::nullopt;
  const std::string& handle = s.components[index].handle();
  if (handle.empty()) return std::nullopt;
  for (const auto& edge : edges) {
    if (edge.from == screen_name && edge.component == handle) return edge.to;
  }
  return std::nullopt;
}

BehaviorModel parse_behavior(const std::string& json_text, const std::string& file) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(file, 0, 0, e.what());
  }
  if (!doc.is_object()) invalid(file, "expected an object");

  BehaviorModel model;
  try {
    model.initial = doc.at("initial").get<std::string>();
    if (auto dims = doc.find("screen"); dims != doc.end()) {
      if (!dims->is_array() || dims->size() != 2) invalid(file, "screen must be [width, height]");
      model.screen_dims = {(*dims)[0].get<int>(), (*dims)[1].get<int>()};
    }
    for (const auto& [name, value] : doc.at("screens").items()) {
      ScreenDecl screen;
      screen.name = name;
      const json* components = &value;
      if (value.is_object()) {
        screen.activity = value.value("activity", "");
        screen.window = value.value("window", "");
        components = &value.at("components");
      }
      if (!components->is_array()) invalid(file, "screen '" + name + "' components must be a list");
      for (const auto& c : *components) screen.components.push_back(parse_component(c, file));
      if (screen.activity.empty()) screen.activity = name;
      if (screen.window.empty()) screen.window = name;
      model.screens.emplace(name, std::move(screen));
    }
    if (auto edges = doc.find("edges"); edges != doc.end()) {
      for (const auto& e : *edges) {
        model.edges.push_back({e.at("from").get<std::string>(), e.at("component").get<std::string>(),
                               e.at("to").get<std::string>()});
      }
    }
  } catch (const json::exception& e) {
    invalid(file, e.what());
  }

  if (model.screen_dims.width <= 0 || model.screen_dims.height <= 0) {
    invalid(file, "screen dimensions must be positive");
  }
  if (!model.screens.count(model.initial)) invalid(file, "initial screen '" + model.initial + "' missing");
  for (const auto& [name, screen] : model.screens) {
    for (const auto& c : screen.components) {
      if (c.bounds.width <= 0 || c.bounds.height <= 0 || !c.bounds.within(model.screen_dims)) {
        invalid(file, "component '" + c.handle() + "' on '" + name + "' has bounds outside the screen");
      }
    }
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& edge : model.edges) {
    if (!model.screens.count(edge.from)) invalid(file, "edge from unknown screen '" + edge.from + "'");
    if (!model.screens.count(edge.to)) invalid(file, "edge to unknown screen '" + edge.to + "'");
    const ScreenDecl& from = model.screens.at(edge.from);
    auto index = model.find_handle(from, edge.component);
    if (!index) {
      invalid(file, "edge component '" + edge.component + "' does not name exactly one component on '" +
                        edge.from + "'");
    }
    if (!from.components[*index].clickable) {
      invalid(file, "edge component '" + edge.component + "' on '" + edge.from + "' is not clickable");
    }
    if (!seen.emplace(edge.from, edge.component).second) {
      invalid(file, "duplicate edge for '" + edge.component + "' on '" + edge.from + "'");
    }
  }
  return model;
}

}  // namespace fusion::dynamic
