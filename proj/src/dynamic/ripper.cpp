#include "fusion/dynamic/ripper.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "fusion/dynamic/matcher.hpp"
#include "fusion/error.hpp"
#include "fusion/graph_validation.hpp"
#include "fusion/store/hash.hpp"

namespace fusion::dynamic {
namespace {

struct PathStep {
  std::string state_id;  // state the click is performed on
  InstanceRef target;
};

struct StateRecord {
  std::vector<LocalizedInstance> instances;
  std::vector<PathStep> path;  // tree path from the root, for replay
};

std::string format_state_id(std::size_t ordinal) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "s%04zu", ordinal);
  return buffer;
}

std::string describe(const InstanceRef& ref) {
  return ref.descriptor_id + "#" + std::to_string(ref.object_index);
}

class Ripper {
 public:
  Ripper(DeviceDriver& driver, const ComponentUniverse& universe, const RipLimits& limits)
      : driver_(driver), universe_(universe), limits_(limits) {}

  RipResult run() {
    Observation first = driver_.launch_cold();
    auto instances = localize(first, universe_);
    const std::string root = add_state(first, std::move(instances), driver_.capture_screenshot(), {});
    result_.graph.root_state = root;
    current_obs_ = std::move(first);
    explore(root);
    return finish();
  }

 private:
  void stop(const std::string& why) {
    if (!stopped_) result_.log.push_back("stopped: " + why);
    stopped_ = true;
    result_.graph.truncated = true;
  }

  std::string store_png(const Raster& raster) {
    std::string png = encode_png(raster);
    std::string hash = sha256_hex(png);
    result_.screenshots.emplace(hash, std::move(png));
    return hash;
  }

  std::string add_state(const Observation& obs, std::vector<LocalizedInstance> instances,
                        const Raster& screenshot, std::vector<PathStep> path) {
    const std::string id = format_state_id(records_.size() + 1);
    ScreenState state;
    state.state_id = id;
    state.activity_name = obs.activity_name;
    state.window_name = obs.window_name;
    state.screen_dims = obs.screen_dims;
    state.signature = signature_of(obs.activity_name, obs.window_name, instances);
    state.full_screenshot = store_png(screenshot);
    for (const auto& li : instances) {
      if (!li.instance.bounds.within(screenshot.size()) || li.instance.bounds.width == 0 ||
          li.instance.bounds.height == 0) {
        result_.log.push_back("state " + id + ": dropped " + describe(li.instance.ref()) +
                              " with off-screen bounds");
        continue;
      }
      ComponentInstance instance = li.instance;
      instance.component_screenshot = store_png(screenshot.crop(instance.bounds));
      state.instances.push_back(std::move(instance));
    }
    by_signature_.emplace(state.signature, id);
    result_.graph.states.push_back(std::move(state));
    records_.emplace(id, StateRecord{std::move(instances), std::move(path)});
    return id;
  }

  const ScreenState& state(const std::string& id) const {
    for (const auto& s : result_.graph.states) {
      if (s.state_id == id) return s;
    }
    throw Error(ErrorCode::kNotFound, "unknown state " + id);
  }

  bool at(const Observation& obs, const std::string& id) {
    return signature_of(obs.activity_name, obs.window_name, localize(obs, universe_)) ==
           state(id).signature;
  }

  // Puts the driver on `id`: already there, one step back, or a replay.
  bool ensure_at(const std::string& id) {
    Observation obs = driver_.observe();
    if (at(obs, id)) {
      current_obs_ = std::move(obs);
      return true;
    }
    if (driver_.can_go_back()) {
      driver_.go_back();
      obs = driver_.observe();
      if (at(obs, id)) {
        current_obs_ = std::move(obs);
        return true;
      }
    }
    return replay(id);
  }

  bool replay(const std::string& id) {
    const auto& path = records_.at(id).path;
    for (int attempt = 1; attempt <= limits_.relocalize_retries; ++attempt) {
      Observation obs = driver_.launch_cold();
      bool ok = at(obs, result_.graph.root_state);
      for (std::size_t i = 0; ok && i < path.size(); ++i) {
        auto raw = raw_index(obs, path[i].target);
        ok = raw && driver_.perform(Action::click(), *raw, limits_.per_action_timeout) ==
                        PerformStatus::kOk;
        if (!ok) break;
        obs = driver_.observe();
        ok = at(obs, i + 1 < path.size() ? path[i + 1].state_id : id);
      }
      if (ok) {
        current_obs_ = std::move(obs);
        return true;
      }
      result_.log.push_back("replay to " + id + " failed (attempt " + std::to_string(attempt) + ")");
    }
    stop("cannot re-localize state " + id);
    return false;
  }

  std::optional<std::size_t> raw_index(const Observation& obs, const InstanceRef& ref) {
    for (const auto& li : localize(obs, universe_)) {
      if (li.instance.ref() == ref) return li.raw_index;
    }
    return std::nullopt;
  }

  void explore(const std::string& id) {
    const std::vector<LocalizedInstance> instances = records_.at(id).instances;
    for (const auto& li : instances) {
      if (stopped_) return;
      if (!li.clickable) continue;
      if (!state(id).find(li.instance.ref())) continue;  // dropped off-screen
      if (result_.actions_performed >= limits_.max_actions) {
        stop("action limit " + std::to_string(limits_.max_actions) + " reached");
        return;
      }
      if (!ensure_at(id)) return;
      const InstanceRef ref = li.instance.ref();
      auto raw = raw_index(current_obs_, ref);
      if (!raw) {
        result_.log.push_back("state " + id + ": " + describe(ref) + " not found on screen; skipped");
        continue;
      }

      const std::string before = store_png(driver_.capture_screenshot());
      if (before != state(id).full_screenshot) {
        result_.log.push_back("state " + id + ": screenshot differs from the recorded one");
      }
      const auto started = std::chrono::steady_clock::now();
      const PerformStatus status = driver_.perform(Action::click(), *raw, limits_.per_action_timeout);
      const auto elapsed = std::chrono::steady_clock::now() - started;
      ++result_.actions_performed;
      if (status == PerformStatus::kTimeout || elapsed > limits_.per_action_timeout) {
        result_.log.push_back("state " + id + ": click on " + describe(ref) + " timed out; skipped");
        continue;
      }
      if (status == PerformStatus::kRejected) {
        result_.log.push_back("state " + id + ": click on " + describe(ref) + " rejected; skipped");
        continue;
      }

      Observation after = driver_.observe();
      const Raster after_shot = driver_.capture_screenshot();
      auto after_instances = localize(after, universe_);
      const std::string signature =
          signature_of(after.activity_name, after.window_name, after_instances);

      std::string to;
      bool fresh = false;
      if (auto known = by_signature_.find(signature); known != by_signature_.end()) {
        to = known->second;
      } else {
        if (records_.size() >= limits_.max_states) {
          stop("state limit " + std::to_string(limits_.max_states) + " reached");
          return;
        }
        auto path = records_.at(id).path;
        path.push_back({id, ref});
        to = add_state(after, std::move(after_instances), after_shot, std::move(path));
        fresh = true;
      }
      result_.graph.transitions.push_back(
          Transition{id, ActionKind::kClick, ref, to, before, store_png(after_shot)});
      current_obs_ = std::move(after);
      if (fresh) explore(to);
    }
  }

  RipResult finish() {
    auto& graph = result_.graph;
    std::sort(graph.states.begin(), graph.states.end(),
              [](const auto& a, const auto& b) { return a.state_id < b.state_id; });
    std::set<std::string> used;
    for (const auto& s : graph.states) {
      for (const auto& i : s.instances) used.insert(i.descriptor_id);
    }
    for (auto& d : universe_.dynamic_descriptors()) {
      if (used.count(d.descriptor_id)) graph.dynamic_descriptors.push_back(std::move(d));
    }
    validate_graph(graph, make_lookup(universe_.base(), graph));
    return std::move(result_);
  }

  DeviceDriver& driver_;
  WorkingUniverse universe_;
  const RipLimits& limits_;
  RipResult result_;
  std::map<std::string, StateRecord> records_;
  std::map<std::string, std::string> by_signature_;
  Observation current_obs_;
  bool stopped_ = false;
};

}  // namespace

RipResult rip(DeviceDriver& driver, const ComponentUniverse& universe, const RipLimits& limits) {
  return Ripper(driver, universe, limits).run();
}

}  // namespace fusion::dynamic
