#include "fusion/analysis/package.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fusion/analysis/zip_reader.hpp"
#include "fusion/error.hpp"

namespace fusion::analysis {
namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& file_name) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(file_name, 0, 0, e.what());
  }
}

std::string require_string(const json& object, const char* key, const std::string& file_name) {
  auto it = object.find(key);
  if (it == object.end() || !it->is_string()) {
    throw Error(ErrorCode::kValidation,
                file_name + ": missing or non-string key '" + key + "'", key);
  }
  return it->get<std::string>();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kEnvironment, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool has_suffix(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

const ActivityDecl* Manifest::find_activity(const std::string& name) const {
  for (const auto& a : activities) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

Manifest parse_manifest(const std::string& json_text, const std::string& file_name) {
  const json doc = parse_json(json_text, file_name);
  if (!doc.is_object()) throw Error(ErrorCode::kValidation, file_name + ": expected an object");
  Manifest m;
  m.app_id = require_string(doc, "app_id", file_name);
  m.app_version = require_string(doc, "app_version", file_name);
  m.main_activity = require_string(doc, "main_activity", file_name);
  if (m.app_id.empty() || m.app_version.empty()) {
    throw Error(ErrorCode::kValidation, file_name + ": app_id and app_version must be non-empty");
  }
  // Both end up as path components in the store.
  for (const std::string* s : {&m.app_id, &m.app_version}) {
    if (s->find('/') != std::string::npos || *s == "." || *s == "..") {
      throw Error(ErrorCode::kValidation, file_name + ": '" + *s + "' is not a valid identifier");
    }
  }
  auto activities = doc.find("activities");
  if (activities == doc.end() || !activities->is_array()) {
    throw Error(ErrorCode::kValidation, file_name + ": 'activities' must be a list", "activities");
  }
  for (const auto& entry : *activities) {
    if (!entry.is_object()) {
      throw Error(ErrorCode::kValidation, file_name + ": activity entries must be objects");
    }
    ActivityDecl a;
    a.name = require_string(entry, "name", file_name);
    a.layout = entry.value("layout", "");
    a.source_unit = entry.value("source_unit", "");
    if (auto menus = entry.find("menus"); menus != entry.end()) {
      a.menus = menus->get<std::vector<std::string>>();
    }
    m.activities.push_back(std::move(a));
  }
  return m;
}

SourceIndex parse_source_index(const std::string& json_text, const std::string& file_name) {
  const json doc = parse_json(json_text, file_name);
  if (!doc.is_object()) throw Error(ErrorCode::kValidation, file_name + ": expected an object");
  SourceIndex index;
  for (const auto& [key, units] : doc.items()) {
    if (!units.is_array()) {
      throw Error(ErrorCode::kValidation, file_name + ": entry '" + key + "' must be a list");
    }
    for (const auto& unit : units) {
      if (!unit.is_string()) {
        throw Error(ErrorCode::kValidation, file_name + ": entry '" + key + "' has a non-string unit");
      }
      index[key].push_back(unit.get<std::string>());
    }
  }
  return index;
}

void validate_package(const AppPackage& package) {
  const Manifest& m = package.manifest;
  std::set<std::string> names;
  for (const auto& a : m.activities) {
    if (!names.insert(a.name).second) {
      throw Error(ErrorCode::kValidation, "manifest.json: duplicate activity '" + a.name + "'");
    }
    if (!a.layout.empty() && !package.layouts.count(a.layout)) {
      throw Error(ErrorCode::kValidation,
                  "manifest.json: activity '" + a.name + "' names missing layout '" + a.layout + "'");
    }
    for (const auto& menu : a.menus) {
      if (!package.menus.count(menu)) {
        throw Error(ErrorCode::kValidation,
                    "manifest.json: activity '" + a.name + "' names missing menu '" + menu + "'");
      }
    }
  }
  if (!names.count(m.main_activity)) {
    throw Error(ErrorCode::kValidation,
                "manifest.json: main_activity '" + m.main_activity + "' is not declared");
  }
}

AppPackage package_from_files(const std::map<std::string, std::string>& raw_files) {
  // Archives often wrap everything in one top-level folder.
  std::string prefix;
  if (!raw_files.count("manifest.json")) {
    for (const auto& [name, _] : raw_files) {
      if (has_suffix(name, "/manifest.json") &&
          name.find('/') == name.size() - std::string_view("/manifest.json").size()) {
        prefix = name.substr(0, name.size() - std::string_view("manifest.json").size());
        break;
      }
    }
  }
  std::map<std::string, std::string> files;
  for (const auto& [name, contents] : raw_files) {
    if (name.compare(0, prefix.size(), prefix) == 0) files[name.substr(prefix.size())] = contents;
  }

  auto manifest = files.find("manifest.json");
  if (manifest == files.end()) {
    throw Error(ErrorCode::kValidation, "package has no manifest.json");
  }
  AppPackage package;
  package.manifest = parse_manifest(manifest->second);
  for (const auto& [name, contents] : files) {
    if (name.rfind("layouts/", 0) == 0 && has_suffix(name, ".xml") &&
        name.find('/', 8) == std::string::npos) {
      package.layouts[name.substr(8)] = contents;
    } else if (name.rfind("menus/", 0) == 0 && has_suffix(name, ".xml") &&
               name.find('/', 6) == std::string::npos) {
      package.menus[name.substr(6)] = contents;
    }
  }
  if (auto index = files.find("source-index.json"); index != files.end()) {
    package.source_index = parse_source_index(index->second);
  }
  if (auto behavior = files.find("behavior.json"); behavior != files.end()) {
    package.behavior_json = behavior->second;
  }
  validate_package(package);
  return package;
}

AppPackage load_package(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::recursive_directory_iterator(path)) {
      if (!entry.is_regular_file()) continue;
      files[fs::relative(entry.path(), path).generic_string()] = read_file(entry.path());
    }
    return package_from_files(files);
  }
  if (fs::is_regular_file(path, ec)) return package_from_files(read_zip_file(path));
  throw Error(ErrorCode::kNotFound, "package not found: " + path.string());
}

}  // namespace fusion::analysis
