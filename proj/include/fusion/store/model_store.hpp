#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "fusion/store/model_view.hpp"
#include "fusion/types.hpp"

namespace fusion {

struct AppKey {
  std::string app_id;
  std::string app_version;
  auto operator<=>(const AppKey&) const = default;
};

// File-tree store:
//   apps/<app_id>/<version>/{universe.json, graph.json, behavior.json}
//   shots/<sha256>.png   reports/<id>.json   sessions/<id>.json
//   meta/{counter, session_counter, lock}
// Documents are canonical JSON. Every write goes to a temporary file and is
// renamed into place, under a store-wide lock (in-process mutex plus an
// advisory file lock for other processes). App models and reports are
// append-only; sessions are rewritten as they progress.
class ModelStore {
 public:
  explicit ModelStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  // Throws Error(kConflict) if the version already has a universe.
  void put_universe(const ComponentUniverse& universe,
                    const std::optional<std::string>& behavior_json = std::nullopt);
  // Requires a stored universe; validates the graph against it and checks
  // every referenced screenshot is present. Conflict if a graph exists.
  void put_graph(const std::string& app_id, const std::string& version, const EventFlowGraph& graph);
  // Both documents at once, same checks as put_graph; conflict if either exists.
  void put_model(const std::string& app_id, const std::string& version,
                 const ComponentUniverse& universe, const EventFlowGraph& graph);

  ShotRef put_screenshot(const std::string& png_bytes);
  bool has_screenshot(const std::string& hash) const;
  std::string get_screenshot(const std::string& hash) const;
  std::set<ShotRef> screenshot_hashes() const;

  // Versions with a stored universe, sorted.
  std::vector<AppKey> list_apps() const;
  bool has_universe(const std::string& app_id, const std::string& version) const;
  ComponentUniverse get_universe(const std::string& app_id, const std::string& version) const;
  std::optional<std::string> get_behavior(const std::string& app_id, const std::string& version) const;
  // Universe + graph; throws Error(kNotFound) when either is missing.
  std::shared_ptr<const ModelView> get_model(const std::string& app_id, const std::string& version) const;

  std::vector<ComponentInstance> components_for_state(const std::string& app_id, const std::string& version,
                                                      const std::string& state_id, ActionKind action) const;
  std::vector<std::pair<std::string, ComponentInstance>> all_components(const std::string& app_id,
                                                                        const std::string& version,
                                                                        ActionKind action) const;
  std::set<std::string> transitions_from(const std::string& app_id, const std::string& version,
                                         const std::string& state_id, ActionKind action,
                                         const InstanceRef& target) const;

  // Strictly increasing across restarts; the first id of a fresh store is 1.
  std::uint64_t next_report_id();
  // Conflict if the id exists; validation error if a screenshot is missing.
  void put_report(const BugReport& report);
  BugReport get_report(std::uint64_t report_id) const;
  // Canonical stored bytes.
  std::string get_report_document(std::uint64_t report_id) const;

  std::string next_session_id();
  void put_session(const ReportSession& session);
  ReportSession get_session(const std::string& session_id) const;

 private:
  class WriteLock;

  std::filesystem::path version_dir(const std::string& app_id, const std::string& version) const;
  std::uint64_t bump_counter(const std::string& name);
  void require_screenshots(const EventFlowGraph& graph) const;

  std::filesystem::path root_;
  std::mutex write_mutex_;
  mutable std::shared_mutex cache_mutex_;
  mutable std::map<AppKey, std::shared_ptr<const ModelView>> cache_;
};

}  // namespace fusion
