#include "fusion/analysis/universe.hpp"

#include <algorithm>
#include <set>

#include "fusion/analysis/layout_parser.hpp"
#include "fusion/error.hpp"

namespace fusion::analysis {
namespace {

// Activities hosting a layout/menu file, in manifest order. Files nobody
// claims are attributed to the main activity.
std::vector<std::string> hosts_of(const Manifest& manifest, const std::string& file, bool menu,
                                  std::vector<std::string>& warnings) {
  std::vector<std::string> hosts;
  for (const auto& a : manifest.activities) {
    const bool hosts_file =
        menu ? std::find(a.menus.begin(), a.menus.end(), file) != a.menus.end() : a.layout == file;
    if (hosts_file) hosts.push_back(a.name);
  }
  if (hosts.empty()) {
    warnings.push_back(std::string(menu ? "menus/" : "layouts/") + file +
                       ": not referenced by any activity; attributed to " + manifest.main_activity);
    hosts.push_back(manifest.main_activity);
  }
  return hosts;
}

void add_file(const ParsedFile& parsed, const std::string& qualified_name,
              const std::vector<std::string>& hosts, UniverseBuild& out) {
  for (const auto& node : parsed.nodes) {
    ComponentDescriptor d = node.descriptor;
    d.descriptor_id = qualified_name + "#" + node.node_path;
    d.layout_origin = {qualified_name, node.node_path};
    d.containing_activities = hosts;
    out.universe.descriptors.push_back(std::move(d));
  }
  out.warnings.insert(out.warnings.end(), parsed.warnings.begin(), parsed.warnings.end());
}

}  // namespace

UniverseBuild build_component_universe(const AppPackage& package) {
  const Manifest& manifest = package.manifest;
  UniverseBuild out;
  out.universe.app_id = manifest.app_id;
  out.universe.app_version = manifest.app_version;
  out.universe.main_activity = manifest.main_activity;
  for (const auto& a : manifest.activities) {
    out.universe.activity_sources[a.name] = a.source_unit;
    out.universe.activity_index[a.name];
  }

  for (const auto& [file, contents] : package.layouts) {
    const std::string qualified = "layouts/" + file;
    add_file(parse_layout_file(contents, qualified), qualified,
             hosts_of(manifest, file, false, out.warnings), out);
  }
  for (const auto& [file, contents] : package.menus) {
    const std::string qualified = "menus/" + file;
    add_file(parse_menu_file(contents, qualified), qualified,
             hosts_of(manifest, file, true, out.warnings), out);
  }

  auto& descriptors = out.universe.descriptors;
  std::sort(descriptors.begin(), descriptors.end(),
            [](const auto& a, const auto& b) { return a.descriptor_id < b.descriptor_id; });
  for (const auto& d : descriptors) {
    for (const auto& activity : d.containing_activities) {
      out.universe.activity_index[activity].push_back(d.descriptor_id);
    }
  }
  return out;
}

ComponentUniverse link_sources(ComponentUniverse universe, const SourceIndex& index) {
  for (auto& d : universe.descriptors) {
    std::vector<std::string> sources;
    std::set<std::string> seen;
    auto take = [&](const std::string& key) {
      if (key.empty()) return;
      auto it = index.find(key);
      if (it == index.end()) return;
      for (const auto& unit : it->second) {
        if (seen.insert(unit).second) sources.push_back(unit);
      }
    };
    take(d.resource_id);
    for (const auto& activity : d.containing_activities) take(activity);
    d.declaring_sources = std::move(sources);
  }
  return universe;
}

UniverseBuild analyze_package(const AppPackage& package) {
  UniverseBuild build = build_component_universe(package);
  build.universe = link_sources(std::move(build.universe), package.source_index);
  return build;
}

}  // namespace fusion::analysis
