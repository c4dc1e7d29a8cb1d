#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fusion::analysis {

struct ActivityDecl {
  std::string name;
  std::string layout;       // file name under layouts/, may be empty
  std::string source_unit;  // class implementing the activity
  std::vector<std::string> menus;  // file names under menus/
};

struct Manifest {
  std::string app_id;
  std::string app_version;
  std::string main_activity;
  std::vector<ActivityDecl> activities;

  const ActivityDecl* find_activity(const std::string& name) const;
};

using SourceIndex = std::map<std::string, std::vector<std::string>>;

// Portable stand-in for a decompiled application package.
struct AppPackage {
  Manifest manifest;
  std::map<std::string, std::string> layouts;  // file name -> XML text
  std::map<std::string, std::string> menus;    // file name -> XML text
  SourceIndex source_index;
  std::optional<std::string> behavior_json;    // opaque to static analysis
};

// Parses manifest.json text. Throws ParseError / Error(kValidation).
Manifest parse_manifest(const std::string& json_text, const std::string& file_name = "manifest.json");
SourceIndex parse_source_index(const std::string& json_text,
                               const std::string& file_name = "source-index.json");

// Checks cross-file consistency: main activity declared, activity names
// unique, referenced layout and menu files present.
void validate_package(const AppPackage& package);

// Loads a package from a directory or a .zip archive and validates it.
AppPackage load_package(const std::filesystem::path& path);

// In-memory form, as used by load_package after reading the files.
// Keys are package-relative paths ("manifest.json", "layouts/main.xml").
AppPackage package_from_files(const std::map<std::string, std::string>& files);

}  // namespace fusion::analysis
