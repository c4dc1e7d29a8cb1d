#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "fusion/types.hpp"

namespace fusion {

// Read-only, indexed view over one ingested (universe, graph) pair. All
// query results are in deterministic order.
class ModelView {
 public:
  // Validates the graph against the universe; throws Error(kValidation).
  ModelView(ComponentUniverse universe, EventFlowGraph graph);

  const ComponentUniverse& universe() const { return universe_; }
  const EventFlowGraph& graph() const { return graph_; }

  // Static or synthesized descriptor; nullptr if unknown.
  const ComponentDescriptor* descriptor(std::string_view descriptor_id) const;
  // Throws Error(kNotFound).
  const ScreenState& state(std::string_view state_id) const;
  bool has_state(std::string_view state_id) const;

  // Instances on the state whose descriptor allows `action`, in instance order.
  std::vector<ComponentInstance> components_for_state(std::string_view state_id,
                                                      ActionKind action) const;
  // Union over all states ordered by (state_id, instance order); an
  // instance present on several states appears once per state.
  std::vector<std::pair<std::string, ComponentInstance>> all_components(ActionKind action) const;
  // to_states recorded for (state, action, target); empty when never exercised.
  std::set<std::string> transitions_from(std::string_view state_id, ActionKind action,
                                         const InstanceRef& target) const;
  // States whose full screenshot has this hash.
  std::vector<std::string> states_with_screenshot(std::string_view hash) const;

  // Source unit implementing the activity hosting the state, falling back
  // to the descriptor's first declaring source.
  std::string source_unit_for(std::string_view state_id, std::string_view descriptor_id) const;

 private:
  ComponentUniverse universe_;
  EventFlowGraph graph_;
  std::map<std::tuple<std::string, ActionKind, InstanceRef>, std::set<std::string>> transitions_;
};

}  // namespace fusion
