#pragma once

#include <cstdint>
#include <filesystem>
#include <array>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fusion/analysis/package.hpp"
#include "fusion/dynamic/behavior.hpp"
#include "fusion/dynamic/ripper.hpp"
#include "fusion/store/model_store.hpp"
#include "fusion/store/model_view.hpp"
#include "fusion/geometry.hpp"
#include "fusion/types.hpp"

namespace fusion::testing {

std::filesystem::path fixture_path(const std::string& name);
std::string read_file(const std::filesystem::path& path);
void write_files(const std::filesystem::path& dir, const std::map<std::string, std::string>& files);
std::map<std::string, std::string> read_tree(const std::filesystem::path& dir);

class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

struct GeneratorOptions {
  int screens = 4;
  int activities = 2;
  bool unreachable_screen = false;
  // Probability (percent) that a spare clickable component gets an edge.
  int extra_edge_percent = 50;
};

// A random but valid package: manifest, one layout per activity, and a
// behavior model in which every screen except the optional unreachable
// one is reachable by clicks.
std::map<std::string, std::string> generate_app(std::uint32_t seed, const GeneratorOptions& options,
                                                const std::string& app_id);

// Screen identity as the ripper sees it.
using ScreenKey = std::pair<std::string, std::string>;  // activity, window
using Bounds = std::array<int, 4>;
using EdgeKey = std::tuple<ScreenKey, Bounds, ScreenKey>;

Bounds bounds_of(const Rect& r);

struct Closure {
  std::set<ScreenKey> screens;
  std::multiset<EdgeKey> transitions;
};

// Breadth-first click closure computed straight from the behavior model:
// every clickable component on a reachable screen yields one transition,
// to its edge target or back to the same screen.
Closure click_closure(const dynamic::BehaviorModel& model);

// The same shape read off a ripped graph.
Closure graph_closure(const EventFlowGraph& graph);

// A package pushed through static analysis and a default rip.
struct RippedApp {
  analysis::AppPackage package;
  ComponentUniverse universe;
  dynamic::BehaviorModel behavior;
  dynamic::RipResult rip;

  ModelView view() const { return ModelView(universe, rip.graph); }
  // Screenshots first, then universe and graph.
  void store_into(ModelStore& store) const;
};

RippedApp rip_package(analysis::AppPackage package);
RippedApp rip_fixture(const std::string& name);

// Enumerates every click path of up to max_length steps straight on the
// behavior model, replays each as recorded steps and checks that the
// hypothesis stays KNOWN on the true screen and that each step's component
// is offered in the state-scoped suggestions.
struct SoundnessReport {
  std::size_t paths = 0;
  std::vector<std::string> failures;
};
SoundnessReport check_soundness(const RippedApp& app, int max_length);

// Structural check that every state and transition carries the captured
// data items: text, transition endpoints, action, before/after screenshots,
// bounds, activity and window, component crop, object index. Screenshot
// references must resolve in `shots` (hash -> PNG); crops must match the
// bounds size. Returns one message per problem.
std::vector<std::string> capture_problems(const EventFlowGraph& graph,
                                          const std::map<std::string, std::string>& shots);

}  // namespace fusion::testing
