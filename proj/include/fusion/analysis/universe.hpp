#pragma once

#include <string>
#include <vector>

#include "fusion/analysis/package.hpp"
#include "fusion/types.hpp"

namespace fusion::analysis {

struct UniverseBuild {
  ComponentUniverse universe;
  std::vector<std::string> warnings;
};

// Union of all layout and menu descriptors. descriptor_id is
// "<dir>/<file>#<node path>", so it depends only on file and position.
// A parse error in any file aborts the build.
UniverseBuild build_component_universe(const AppPackage& package);

// Fills declaring_sources from the index: entries for the resource id,
// then entries for each containing activity, without duplicates.
ComponentUniverse link_sources(ComponentUniverse universe, const SourceIndex& index);

// build + link, the full static-analysis pass.
UniverseBuild analyze_package(const AppPackage& package);

}  // namespace fusion::analysis
